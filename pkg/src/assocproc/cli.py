"""Command-line front end.

Exit codes: 0 success/match, 1 configuration or argument error,
2 no match, 3 ambiguous, 4 automaton/oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import costmodel
from .core import ConfigError, ProcessorConfig, parse_config
from .decision import (
    Mode,
    Outcome,
    classify_full_coincidence,
    classify_max_resemblance,
    classify_min_difference,
)
from .fuzzifier import UniverseViolation, fuzzify
from .oracle import naive_match
from .pamu import PamuError, PamuMatrix, flash, format_trace, match_sequence

EXIT_OK, EXIT_ERROR, EXIT_NO_MATCH, EXIT_AMBIGUOUS, EXIT_DISAGREE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def load_config(path: str) -> ProcessorConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from exc
    try:
        return parse_config(text)
    except ConfigError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def build_matrix(config: ProcessorConfig) -> PamuMatrix:
    try:
        return flash(config.etalons, config.alphabet, config.correction_enabled)
    except (PamuError, ValueError) as exc:
        raise UsageError(f"etalons: {exc}") from exc


def cmd_flash(args, out) -> int:
    config = load_config(args.config)
    dump = build_matrix(config).dump() + "\n"
    if args.out:
        Path(args.out).write_text(dump)
    else:
        out.write(dump)
    return EXIT_OK


def _input_symbols(args, config: ProcessorConfig) -> list[str]:
    if args.numeric is not None:
        if not config.fuzzifier_spec:
            raise UsageError("numeric input needs a 'fuzzifier' section in the config")
        try:
            values = [float(v) for v in args.numeric.split()]
            return fuzzify(config.fuzzifier_spec, values)
        except (ValueError, UniverseViolation) as exc:
            raise UsageError(f"numeric input: {exc}") from exc
    if args.symbols is not None:
        return args.symbols.split()
    return Path(args.symbols_file).read_text().split()


def cmd_run(args, out) -> int:
    config = load_config(args.config)
    matrix = build_matrix(config)
    symbols = _input_symbols(args, config)
    mode = Mode(args.mode)

    report = match_sequence(matrix, symbols)
    if args.trace:
        Path(args.trace).write_text(format_trace(report, matrix.lane_count) + "\n")

    if mode is Mode.FULL_COINCIDENCE:
        decision = classify_full_coincidence(report, matrix)
    elif mode is Mode.MAX_RESEMBLANCE:
        decision = classify_max_resemblance(symbols, config.etalons)
    else:
        decision = classify_min_difference(symbols, config.etalons)
    decision = decision.with_control(config)

    if args.json:
        payload = decision.to_json()
        payload["symbols"] = symbols
        payload["accepted"] = sorted(report.accepted)
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(decision.render() + "\n")

    if decision.class_label is Outcome.NO_MATCH:
        return EXIT_NO_MATCH
    if decision.class_label is Outcome.AMBIGUOUS:
        return EXIT_AMBIGUOUS
    return EXIT_OK


def cmd_cost(args, out) -> int:
    try:
        doc = json.loads(Path(args.params).read_text())
        params = costmodel.params_from_dict(doc)
    except OSError as exc:
        raise UsageError(f"cannot read params {args.params}: {exc.strerror}") from exc
    except (json.JSONDecodeError, costmodel.InvalidParams) as exc:
        raise UsageError(f"{args.params}: {exc}") from exc
    report = costmodel.compare(params)
    if args.json:
        out.write(json.dumps(report.to_json()) + "\n")
    else:
        out.write(report.render() + "\n")
    return EXIT_OK


def noise_token(alphabet) -> str:
    token = "~noise"
    while token in alphabet:
        token += "~"
    return token


def random_inputs(config: ProcessorConfig, matrix: PamuMatrix, count: int, seed: int) -> list[list[str]]:
    rng = random.Random(seed)
    pool = list(config.alphabet.symbols) + [noise_token(config.alphabet)]
    max_len = matrix.depth + 2
    return [[rng.choice(pool) for _ in range(rng.randint(0, max_len))] for _ in range(count)]


def _disagrees(matrix: PamuMatrix, config: ProcessorConfig, symbols: Sequence[str]) -> bool:
    ours = match_sequence(matrix, symbols).accepted
    ref = naive_match(symbols, config.etalons, config.correction_enabled).accepted
    return ours != ref


def shrink(matrix: PamuMatrix, config: ProcessorConfig, symbols: list[str]) -> list[str]:
    """Drop symbols one at a time while the disagreement persists."""
    current = list(symbols)
    progress = True
    while progress:
        progress = False
        for k in range(len(current)):
            candidate = current[:k] + current[k + 1:]
            if _disagrees(matrix, config, candidate):
                current = candidate
                progress = True
                break
    return current


def cmd_check(args, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    config = load_config(args.config)
    matrix = build_matrix(config)
    agree = 0
    for symbols in random_inputs(config, matrix, args.count, args.seed):
        if _disagrees(matrix, config, symbols):
            small = shrink(matrix, config, symbols)
            ours = sorted(match_sequence(matrix, small).accepted)
            ref = sorted(naive_match(small, config.etalons, config.correction_enabled).accepted)
            out.write(f"disagreement input={' '.join(small)!r} pamu={ours} oracle={ref}\n")
            out.write(f"agree={agree}/{args.count}\n")
            return EXIT_DISAGREE
        agree += 1
    out.write(f"agree={agree}/{args.count}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="assocproc", description="Associative fuzzy control processor simulator")
    sub = p.add_subparsers(dest="cmd", required=True)

    fl = sub.add_parser("flash", help="Print the flashed PAMU matrix")
    fl.add_argument("--config", required=True)
    fl.add_argument("--out")
    fl.set_defaults(func=cmd_flash)

    run = sub.add_parser("run", help="Classify one input situation")
    run.add_argument("--config", required=True)
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--symbols", help="whitespace-separated symbol tokens")
    src.add_argument("--symbols-file", help="file with whitespace/newline separated tokens")
    src.add_argument("--numeric", help="whitespace-separated numbers, fuzzified first")
    run.add_argument("--mode", choices=[m.value for m in Mode], default="full")
    run.add_argument("--trace", help="write the per-step trace to this path")
    run.add_argument("--json", action="store_true")
    run.set_defaults(func=cmd_run)

    cost = sub.add_parser("cost", help="Compare flexible and rigid processor costs")
    cost.add_argument("--params", required=True)
    cost.add_argument("--json", action="store_true")
    cost.set_defaults(func=cmd_cost)

    chk = sub.add_parser("check", help="Cross-check the automaton against the oracle")
    chk.add_argument("--config", required=True)
    chk.add_argument("--count", type=int, required=True)
    chk.add_argument("--seed", type=int, required=True)
    chk.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
