"""Closed-form time and memory costs of the flexible (pipelined) and rigid
(PAMU-based) processor structures.

Arithmetic stays in whatever number type the parameters carry, so integer
inputs give exact integer outputs.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from numbers import Real
from typing import Optional


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class ComponentTimes:
    """Per-block times; informational only, the closed forms are used."""
    t_c: Real
    t_l: Real
    t_n_c: Real
    t_n_min: Real
    t_n_max: Real


@dataclass(frozen=True)
class CostParams:
    tau: Real
    gamma: int
    n_inputs: int
    big_n: int
    universe_powers: tuple[int, ...]
    fuzzy_powers: tuple[int, ...]
    rules: int
    classes: int
    decision_field_global: bool = True
    component_times: Optional[ComponentTimes] = None

    def __post_init__(self):
        object.__setattr__(self, "universe_powers", tuple(self.universe_powers))
        object.__setattr__(self, "fuzzy_powers", tuple(self.fuzzy_powers))

    def validate(self) -> "CostParams":
        """Strict check used for user-supplied parameters.

        The formulas themselves accept degenerate zero counts, which tests
        use to isolate single terms.
        """
        for name in ("gamma", "n_inputs", "big_n", "rules", "classes"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParams(f"{name} must be an integer >= 1, got {value!r}")
        if isinstance(self.tau, bool) or not isinstance(self.tau, Real) or not self.tau > 0:
            raise InvalidParams(f"tau must be > 0, got {self.tau!r}")
        if len(self.universe_powers) != self.big_n or len(self.fuzzy_powers) != self.big_n:
            raise InvalidParams(
                f"I and J must each have N={self.big_n} entries, "
                f"got {len(self.universe_powers)} and {len(self.fuzzy_powers)}"
            )
        for name, seq in (("I", self.universe_powers), ("J", self.fuzzy_powers)):
            if any(isinstance(v, bool) or not isinstance(v, int) or v < 1 for v in seq):
                raise InvalidParams(f"{name} entries must be integers >= 1, got {list(seq)}")
        return self


@dataclass(frozen=True)
class CostReport:
    t_flexible: Real
    t_rigid: Real
    v_flexible: Real
    v_rigid: Real
    delta_time: Real
    delta_memory: Real
    crossover_rules: Optional[int] = None

    def render(self) -> str:
        rows = [
            ("T_flexible", self.t_flexible),
            ("T_rigid", self.t_rigid),
            ("V_flexible", self.v_flexible),
            ("V_rigid", self.v_rigid),
            ("delta_time", self.delta_time),
            ("delta_memory", self.delta_memory),
            ("L*", "none" if self.crossover_rules is None else self.crossover_rules),
        ]
        width = max(len(k) for k, _ in rows)
        vwidth = max(len(str(v)) for _, v in rows)
        return "\n".join(f"{k:<{width}}  {str(v):>{vwidth}}" for k, v in rows)

    def to_json(self) -> dict:
        return asdict(self)


def time_flexible(p: CostParams) -> Real:
    return p.tau * (6 + p.n_inputs * p.gamma + 2 * p.gamma)


def time_rigid(p: CostParams) -> Real:
    return p.tau * (6 + 3 * p.gamma)


def _decision_field(p: CostParams) -> int:
    return p.rules * math.prod(p.universe_powers) * p.classes


def memory_flexible(p: CostParams) -> Real:
    # gamma_n in the published sum is read as the word width gamma.
    field_term = _decision_field(p)
    per_variable = sum(
        p.gamma + i + i * j * p.gamma + (0 if p.decision_field_global else field_term)
        for i, j in zip(p.universe_powers, p.fuzzy_powers)
    )
    if p.decision_field_global:
        per_variable += field_term
    return per_variable + p.classes * p.gamma


def memory_rigid(p: CostParams) -> Real:
    return sum(
        p.gamma * i + i + 2 * i * j * p.gamma + 2 * p.big_n * j * p.gamma
        for i, j in zip(p.universe_powers, p.fuzzy_powers)
    ) + p.classes * p.gamma


def crossover_rules(p: CostParams) -> Optional[int]:
    """Smallest rule count L >= 0 at which the flexible processor needs
    strictly more memory than the rigid one, other parameters fixed."""
    base = replace(p, rules=0)
    gap = memory_rigid(base) - memory_flexible(base)
    if gap < 0:
        return 0
    slope = memory_flexible(replace(p, rules=1)) - memory_flexible(base)
    if slope <= 0:
        return None
    return int(gap // slope) + 1


def compare(p: CostParams) -> CostReport:
    tf, tr = time_flexible(p), time_rigid(p)
    vf, vr = memory_flexible(p), memory_rigid(p)
    delta_time = tf - tr
    expected = p.tau * p.gamma * (p.n_inputs - 1)
    # exact for integer tau; float tau only gets rounding slack
    if delta_time != expected and not math.isclose(delta_time, expected, rel_tol=1e-12):
        raise ArithmeticError(f"time delta {delta_time} != tau*gamma*(n-1) = {expected}")
    return CostReport(tf, tr, vf, vr, delta_time, vf - vr, crossover_rules(p))


def params_from_dict(doc) -> CostParams:
    if not isinstance(doc, dict):
        raise InvalidParams("params document must be a JSON object")
    try:
        ct = doc.get("component_times")
        p = CostParams(
            tau=doc["tau"],
            gamma=doc["gamma"],
            n_inputs=doc["n_inputs"],
            big_n=doc["N"],
            universe_powers=tuple(doc["I"]),
            fuzzy_powers=tuple(doc["J"]),
            rules=doc["L"],
            classes=doc["K"],
            decision_field_global=bool(doc.get("decision_field_global", True)),
            component_times=ComponentTimes(**ct) if ct is not None else None,
        )
    except KeyError as exc:
        raise InvalidParams(f"missing key {exc}") from exc
    except TypeError as exc:
        raise InvalidParams(str(exc)) from exc
    return p.validate()
