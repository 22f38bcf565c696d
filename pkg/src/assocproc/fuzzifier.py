"""Linguistic converter: numeric inputs to term symbols.

Memberships are piecewise linear over ordered ``(x, degree)`` breakpoints,
which covers triangles, trapezoids and shoulders. Each input is replaced
by the name of its strongest term, so the output is a crisp situation
chain the PAMU can consume.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .core import SchemaError, ValidationError, check_symbol


class UniverseViolation(ValueError):
    pass


@dataclass(frozen=True)
class FuzzyTerm:
    name: str
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(x), float(d)) for x, d in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError(f"term {self.name!r} has no breakpoints")
        xs = [x for x, _ in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError(f"term {self.name!r}: breakpoints must be strictly increasing")
        if any(not 0.0 <= d <= 1.0 for _, d in pts):
            raise ValueError(f"term {self.name!r}: degrees must lie in [0, 1]")


def membership(term: FuzzyTerm, x: float) -> float:
    pts = term.points
    if x <= pts[0][0]:
        return pts[0][1]
    if x >= pts[-1][0]:
        return pts[-1][1]
    k = bisect_right([p[0] for p in pts], x)
    (x0, d0), (x1, d1) = pts[k - 1], pts[k]
    return d0 + (d1 - d0) * (x - x0) / (x1 - x0)


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    universe: tuple[float, float]
    terms: tuple[FuzzyTerm, ...]
    clamp: bool = True

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        lo, hi = self.universe
        if not lo < hi:
            raise ValueError(f"variable {self.name!r}: empty universe [{lo}, {hi}]")
        if not self.terms:
            raise ValueError(f"variable {self.name!r} has no terms")
        names = [t.name for t in self.terms]
        if len(set(names)) != len(names):
            raise ValueError(f"variable {self.name!r}: duplicate term names")
        for t in self.terms:
            if any(not lo <= x <= hi for x, _ in t.points):
                raise ValueError(f"variable {self.name!r}: term {t.name!r} leaves the universe")
        # Memberships are linear between breakpoints and never negative, so a
        # gap in coverage must show up at some breakpoint or universe bound.
        probes = {lo, hi} | {x for t in self.terms for x, _ in t.points}
        for x in sorted(probes):
            if max(membership(t, x) for t in self.terms) <= 0.0:
                raise ValueError(f"variable {self.name!r}: no term covers x={x}")

    def symbolize(self, value: float) -> str:
        lo, hi = self.universe
        if not math.isfinite(value):
            raise UniverseViolation(f"{self.name}: non-finite input {value}")
        if not lo <= value <= hi:
            if not self.clamp:
                raise UniverseViolation(f"{self.name}: {value} outside [{lo}, {hi}]")
            value = min(max(value, lo), hi)
        best, best_degree = self.terms[0], membership(self.terms[0], value)
        for t in self.terms[1:]:
            d = membership(t, value)
            if d > best_degree:
                best, best_degree = t, d
        return best.name


def fuzzify(variables: Sequence[LinguisticVariable], inputs: Sequence[float]) -> list[str]:
    if len(inputs) != len(variables):
        raise ValueError(f"expected {len(variables)} inputs, got {len(inputs)}")
    return [v.symbolize(float(x)) for v, x in zip(variables, inputs)]


def variables_from_dict(doc) -> tuple[LinguisticVariable, ...]:
    if not isinstance(doc, dict) or not isinstance(doc.get("variables"), list):
        raise SchemaError("fuzzifier section needs a 'variables' list")
    out = []
    for v in doc["variables"]:
        if not isinstance(v, dict):
            raise SchemaError("fuzzifier variable must be an object")
        name = v.get("name")
        where = f"fuzzifier.{name}"
        try:
            lo, hi = v["universe"]
            terms = []
            for t in v["terms"]:
                check_symbol(t["name"], f"{where}.terms")
                terms.append(FuzzyTerm(t["name"], tuple(tuple(p) for p in t["points"])))
            out.append(LinguisticVariable(str(name), (float(lo), float(hi)), tuple(terms),
                                          bool(v.get("clamp", True))))
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"{where}: malformed variable ({exc})") from exc
        except ValueError as exc:
            raise ValidationError(where, str(exc)) from exc
    if not out:
        raise ValidationError("fuzzifier.variables", "at least one variable is required")
    return tuple(out)


def variables_to_dict(variables: Sequence[LinguisticVariable]) -> dict:
    return {
        "variables": [
            {
                "name": v.name,
                "universe": list(v.universe),
                "clamp": v.clamp,
                "terms": [{"name": t.name, "points": [list(p) for p in t.points]} for t in v.terms],
            }
            for v in variables
        ]
    }
