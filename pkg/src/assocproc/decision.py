"""Turn match results into a class and its control word.

Three comparison modes are offered. Full coincidence works on the
automaton's accepted lanes. Maximum resemblance and minimal difference
work positionally on the raw input:

* resemblance of an etalon = matching positions over the shared prefix
  length, divided by the etalon length;
* difference = mismatched positions over the shared prefix length plus
  the absolute length gap.

Ties in either score go to the lowest lane.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import ClassLabel, ControlWord, EtalonSet, ProcessorConfig
from .pamu import MatchReport, PamuMatrix


class UnknownClass(KeyError):
    pass


class Mode(enum.Enum):
    FULL_COINCIDENCE = "full"
    MAX_RESEMBLANCE = "max"
    MIN_DIFFERENCE = "min"


class Outcome(enum.Enum):
    NO_MATCH = "NONE"
    AMBIGUOUS = "AMBIGUOUS"


@dataclass(frozen=True)
class Decision:
    class_label: Union[ClassLabel, Outcome]
    mode: Mode
    control_word: Optional[ControlWord] = None
    score: Optional[Fraction | int] = None
    lanes: tuple[int, ...] = ()

    @property
    def is_concrete(self) -> bool:
        return isinstance(self.class_label, ClassLabel)

    def with_control(self, config: ProcessorConfig) -> "Decision":
        if not self.is_concrete:
            return self
        word = emit_control(self.class_label, config)
        return Decision(self.class_label, self.mode, word, self.score, self.lanes)

    def render(self) -> str:
        parts = [f"mode={self.mode.value}"]
        if self.is_concrete:
            parts.append(f"class={self.class_label.name}")
            if self.control_word is not None:
                parts.append(f"word={self.control_word.bits}")
        else:
            parts.append(f"class={self.class_label.value}")
            if self.class_label is Outcome.AMBIGUOUS:
                parts.append("lanes=[" + ",".join(map(str, self.lanes)) + "]")
        if self.score is not None:
            parts.append(f"score={float(self.score):.6g}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "class": self.class_label.name if self.is_concrete else self.class_label.value,
            "word": self.control_word.bits if self.control_word is not None else None,
            "score": float(self.score) if self.score is not None else None,
            "lanes": list(self.lanes),
        }


def classify_full_coincidence(report: MatchReport, matrix: PamuMatrix) -> Decision:
    lanes = tuple(sorted(report.accepted))
    classes = {matrix.lane_class[i - 1] for i in lanes}
    if not classes:
        return Decision(Outcome.NO_MATCH, Mode.FULL_COINCIDENCE)
    if len(classes) > 1:
        return Decision(Outcome.AMBIGUOUS, Mode.FULL_COINCIDENCE, lanes=lanes)
    return Decision(classes.pop(), Mode.FULL_COINCIDENCE, lanes=lanes)


def resemblance(symbols: Sequence[str], etalon: EtalonSet) -> Fraction:
    hits = sum(1 for a, b in zip(symbols, etalon.symbols) if a == b)
    return Fraction(hits, etalon.length)


def difference(symbols: Sequence[str], etalon: EtalonSet) -> int:
    misses = sum(1 for a, b in zip(symbols, etalon.symbols) if a != b)
    return misses + abs(len(symbols) - etalon.length)


def classify_max_resemblance(symbols: Sequence[str], etalons: Sequence[EtalonSet]) -> Decision:
    if not etalons:
        raise ValueError("no etalons to compare against")
    scores = [resemblance(symbols, e) for e in etalons]
    best = max(range(len(etalons)), key=lambda i: (scores[i], -i))
    return Decision(etalons[best].class_label, Mode.MAX_RESEMBLANCE, score=scores[best], lanes=(best + 1,))


def classify_min_difference(symbols: Sequence[str], etalons: Sequence[EtalonSet]) -> Decision:
    if not etalons:
        raise ValueError("no etalons to compare against")
    scores = [difference(symbols, e) for e in etalons]
    best = min(range(len(etalons)), key=lambda i: (scores[i], i))
    return Decision(etalons[best].class_label, Mode.MIN_DIFFERENCE, score=scores[best], lanes=(best + 1,))


def emit_control(class_label: ClassLabel, config: ProcessorConfig) -> ControlWord:
    try:
        return config.control_table[class_label]
    except KeyError:
        raise UnknownClass(class_label) from None
