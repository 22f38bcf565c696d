"""Slow reference matchers used to cross-check the PAMU automaton.

Nothing here touches the matrix, decoder or bitmasks: ``naive_match``
keeps a plain set of surviving etalon indices and a shared cursor and
applies the operating rules one symbol at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import EtalonSet


@dataclass(frozen=True)
class OracleResult:
    accepted: frozenset[int]
    consumed_subsequence: tuple[str, ...]


def naive_match(symbols: Sequence[str], etalons: Sequence[EtalonSet], correction: bool = True) -> OracleResult:
    if not etalons:
        raise ValueError("empty etalon store")
    words = [list(e.symbols) for e in etalons]
    if not correction and len({len(w) for w in words}) > 1:
        raise ValueError("etalons of unequal length need correction")

    survivors = set(range(1, len(words) + 1))
    finished: set[int] = set()
    consumed: list[str] = []
    for sym in symbols:
        cursor = len(consumed)
        if cursor >= max(len(w) for w in words):
            break
        matched = set()
        for lane in survivors:
            w = words[lane - 1]
            if cursor < len(w) and w[cursor] == sym:
                matched.add(lane)
        if not matched:
            continue  # interference: nothing changes
        survivors = matched
        consumed.append(sym)
        for lane in matched:
            if len(words[lane - 1]) == len(consumed):
                finished.add(lane)

    if correction:
        accepted = finished
    else:
        full = len(consumed) == len(words[0])
        accepted = survivors if full else set()
    return OracleResult(frozenset(accepted), tuple(consumed))


def exact_equality_match(symbols: Sequence[str], etalons: Sequence[EtalonSet]) -> frozenset[int]:
    word = tuple(symbols)
    return frozenset(i for i, e in enumerate(etalons, 1) if tuple(e.symbols) == word)
