"""Parallel associative memory unit (PAMU).

The matrix holds one lane per etalon and one cell per symbol position.
Matching runs as a clocked automaton:

* the distributor selects the current position (one-hot, stored here as
  an integer ``position``),
* the decoder turns the input symbol into a single active line,
* a cell fires when its lane's coincidence detector holds 1, the
  distributor points at its position and its flashed symbol equals the
  decoded one.

If any cell fires (K1) the detectors latch the fired set and the
distributor shifts. If nothing fires the symbol is treated as
interference: detectors and distributor hold. K2 marks a lane that fired
at its own end-of-description position.

Per (position, decoder line) the matrix precomputes a lane bitmask, so one
step is a handful of integer AND operations over all lanes at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .core import Alphabet, ClassLabel, EtalonSet, decode


class PamuError(Exception):
    pass


class EmptyStore(PamuError):
    pass


class UnequalLengthsWithoutCorrection(PamuError):
    pass


class AutomatonExhausted(PamuError):
    pass


def lanes_of(mask: int) -> frozenset[int]:
    """1-based lane numbers of the set bits in ``mask``."""
    lanes = []
    lane = 1
    while mask:
        if mask & 1:
            lanes.append(lane)
        mask >>= 1
        lane += 1
    return frozenset(lanes)


def mask_of(lanes: Iterable[int]) -> int:
    mask = 0
    for lane in lanes:
        mask |= 1 << (lane - 1)
    return mask


def bitstring(mask: int, width: int) -> str:
    """Lane 1 first."""
    return "".join("1" if mask >> i & 1 else "0" for i in range(width))


@dataclass(frozen=True)
class PamuMatrix:
    alphabet: Alphabet
    lane_names: tuple[str, ...]
    lane_class: tuple[ClassLabel, ...]
    rows: tuple[tuple[str, ...], ...]
    correction_enabled: bool
    # match_masks[j][line]: lanes whose cell at position j+1 holds decoder line `line`
    match_masks: tuple[dict[int, int], ...] = field(repr=False, compare=False)
    # live_masks[j]: lanes whose end marker is >= position j+1
    live_masks: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def lane_count(self) -> int:
        return len(self.rows)

    @property
    def depth(self) -> int:
        return max(len(r) for r in self.rows)

    @property
    def end_marker(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def all_lanes(self) -> int:
        return (1 << self.lane_count) - 1

    def cell(self, lane: int, position: int) -> Optional[str]:
        row = self.rows[lane - 1]
        return row[position - 1] if 1 <= position <= len(row) else None

    def dump(self) -> str:
        return "\n".join(
            f"lane={i} class={cls.name} len={len(row)} cells={','.join(row)}"
            for i, (cls, row) in enumerate(zip(self.lane_class, self.rows), 1)
        )


def flash(etalons: Sequence[EtalonSet], alphabet: Alphabet, correction: bool = True) -> PamuMatrix:
    """Program the matrix with one lane per etalon, in input order."""
    if not etalons:
        raise EmptyStore("cannot flash an empty etalon store")
    lengths = {e.length for e in etalons}
    if not correction and len(lengths) > 1:
        raise UnequalLengthsWithoutCorrection(
            "etalon lengths %s differ and correction is disabled; pad explicitly"
            % sorted(lengths)
        )
    for e in etalons:
        missing = [s for s in e.symbols if s not in alphabet]
        if missing:
            raise ValueError(f"etalon {e.name} uses symbols outside the alphabet: {missing}")

    depth = max(lengths)
    match_masks: list[dict[int, int]] = [{} for _ in range(depth)]
    live_masks = [0] * depth
    for lane, e in enumerate(etalons):
        bit = 1 << lane
        for j, symbol in enumerate(e.symbols):
            line = decode(symbol, alphabet)
            match_masks[j][line] = match_masks[j].get(line, 0) | bit
            live_masks[j] |= bit

    return PamuMatrix(
        alphabet=alphabet,
        lane_names=tuple(e.name for e in etalons),
        lane_class=tuple(e.class_label for e in etalons),
        rows=tuple(e.symbols for e in etalons),
        correction_enabled=correction,
        match_masks=tuple(match_masks),
        live_masks=tuple(live_masks),
    )


@dataclass(frozen=True)
class AutomatonState:
    position: int
    detectors: int
    completed: frozenset[int]
    steps_consumed: int = 0
    steps_skipped: int = 0


@dataclass(frozen=True)
class StepOutcome:
    input_symbol: str
    fired: int
    k1: bool
    k2_lanes: frozenset[int]
    position_before: int
    detectors_after: int


@dataclass(frozen=True)
class MatchReport:
    accepted: frozenset[int]
    trace: tuple[StepOutcome, ...]
    final_state: AutomatonState
    unconsumed: int = 0  # symbols left over when the distributor ran past the matrix

    @property
    def consumed(self) -> tuple[str, ...]:
        return tuple(o.input_symbol for o in self.trace if o.k1)


def init_state(matrix: PamuMatrix) -> AutomatonState:
    return AutomatonState(position=1, detectors=matrix.all_lanes, completed=frozenset())


def step(state: AutomatonState, matrix: PamuMatrix, symbol: str) -> tuple[StepOutcome, AutomatonState]:
    pos = state.position
    if pos > matrix.depth:
        raise AutomatonExhausted(f"distributor at {pos} is past depth {matrix.depth}")

    line = decode(symbol, matrix.alphabet)
    fired = 0
    if line is not None:
        fired = state.detectors & matrix.live_masks[pos - 1] & matrix.match_masks[pos - 1].get(line, 0)

    if not fired:
        outcome = StepOutcome(symbol, 0, False, frozenset(), pos, state.detectors)
        return outcome, replace(state, steps_skipped=state.steps_skipped + 1)

    ends = matrix.end_marker
    k2 = frozenset(i for i in lanes_of(fired) if ends[i - 1] == pos)
    new_state = AutomatonState(
        position=pos + 1,
        detectors=fired,
        completed=state.completed | k2,
        steps_consumed=state.steps_consumed + 1,
        steps_skipped=state.steps_skipped,
    )
    return StepOutcome(symbol, fired, True, k2, pos, fired), new_state


def finalize(state: AutomatonState, matrix: PamuMatrix) -> frozenset[int]:
    """Poll the indication line once input has ended."""
    if matrix.correction_enabled:
        return state.completed
    if state.position == matrix.depth + 1:
        return lanes_of(state.detectors)
    return frozenset()


def match_sequence(matrix: PamuMatrix, symbols: Sequence[str]) -> MatchReport:
    state = init_state(matrix)
    trace = []
    unconsumed = 0
    for k, symbol in enumerate(symbols):
        try:
            outcome, state = step(state, matrix, symbol)
        except AutomatonExhausted:
            unconsumed = len(symbols) - k
            break
        trace.append(outcome)
    return MatchReport(finalize(state, matrix), tuple(trace), state, unconsumed)


def indicator_match(etalon: EtalonSet | Sequence[str], consumed: Sequence[str]) -> int:
    """Indicator of one description against a consumed word.

    Runs the recurrence S_j = S_{j-1} * alpha_j from S_0 = 1, then applies
    the end-of-input poll: the word must have exactly as many symbols as
    the description.
    """
    reference = etalon.symbols if isinstance(etalon, EtalonSet) else tuple(etalon)
    s = 1
    for j, expected in enumerate(reference):
        alpha = 1 if j < len(consumed) and consumed[j] == expected else 0
        s = s * alpha
    return s if len(consumed) == len(reference) else 0


# -- trace text format ---------------------------------------------------

def _fmt_lanes(lanes: Iterable[int]) -> str:
    return "[" + ",".join(str(i) for i in sorted(lanes)) + "]"


def format_trace(report: MatchReport, lane_count: int) -> str:
    lines = []
    for k, o in enumerate(report.trace, 1):
        lines.append(
            f"step={k} sym={o.input_symbol} pos={o.position_before} "
            f"fired={_fmt_lanes(lanes_of(o.fired))} K1={int(o.k1)} "
            f"det={bitstring(o.detectors_after, lane_count)} K2={_fmt_lanes(o.k2_lanes)}"
        )
    return "\n".join(lines)


_TRACE_RE = re.compile(
    r"^step=(?P<step>\d+) sym=(?P<sym>\S+) pos=(?P<pos>\d+) fired=\[(?P<fired>[\d,]*)\] "
    r"K1=(?P<k1>[01]) det=(?P<det>[01]+) K2=\[(?P<k2>[\d,]*)\]$"
)


@dataclass(frozen=True)
class TraceLine:
    step: int
    symbol: str
    position: int
    fired: frozenset[int]
    k1: bool
    detectors: str
    k2: frozenset[int]


def parse_trace(text: str) -> list[TraceLine]:
    def lanes(s: str) -> frozenset[int]:
        return frozenset(int(x) for x in s.split(",") if x)

    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        m = _TRACE_RE.match(raw.strip())
        if m is None:
            raise ValueError(f"trace line {n} is malformed: {raw!r}")
        out.append(TraceLine(
            int(m["step"]), m["sym"], int(m["pos"]), lanes(m["fired"]),
            m["k1"] == "1", m["det"], lanes(m["k2"]),
        ))
    return out


def accepted_from_trace(lines: Iterable[TraceLine]) -> frozenset[int]:
    # Without correction every end marker equals the depth, so K2 at the last
    # position coincides with the full-depth detector poll.
    accepted: set[int] = set()
    for line in lines:
        accepted |= line.k2
    return frozenset(accepted)
