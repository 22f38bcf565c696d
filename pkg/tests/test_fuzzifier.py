import numpy as np
import pytest
from hypothesis import given, strategies as st

from assocproc.core import ValidationError
from assocproc.fuzzifier import (
    FuzzyTerm, LinguisticVariable, UniverseViolation, fuzzify, membership, variables_from_dict,
)

LOW = FuzzyTerm("low", ((0, 1), (50, 0)))
HIGH = FuzzyTerm("high", ((0, 0), (50, 1)))
TEMP = LinguisticVariable("temp", (0, 100), (LOW, HIGH))
TRI = FuzzyTerm("mid", ((10, 0), (30, 1), (40, 1), (60, 0)))


@pytest.mark.parametrize("x, degree", [(0, 1.0), (25, 0.5), (80, 0.0), (-5, 1.0)])
def test_membership_examples(x, degree):
    assert membership(LOW, x) == pytest.approx(degree)


@given(st.floats(-20, 120))
def test_membership_matches_numpy_interp(x):
    for term in (LOW, HIGH, TRI):
        xs, ds = zip(*term.points)
        assert membership(term, x) == pytest.approx(float(np.interp(x, xs, ds)), abs=1e-12)


def test_fuzzify_examples():
    # memberships at 10: low 0.8, high 0.2
    assert membership(LOW, 10) == pytest.approx(0.8)
    assert membership(HIGH, 10) == pytest.approx(0.2)
    assert fuzzify([TEMP], [10]) == ["low"]
    assert fuzzify([TEMP], [25]) == ["low"]  # tie goes to the first term
    assert fuzzify([TEMP, TEMP], [10, 40]) == ["low", "high"]


def test_clamping_and_strict_mode():
    assert fuzzify([TEMP], [250]) == fuzzify([TEMP], [100])
    strict = LinguisticVariable("temp", (0, 100), (LOW, HIGH), clamp=False)
    with pytest.raises(UniverseViolation):
        fuzzify([strict], [250])
    with pytest.raises(ValueError):
        fuzzify([TEMP], [1, 2])


@given(st.floats(-1e6, 1e6))
def test_clamp_equivalence(x):
    lo, hi = TEMP.universe
    assert fuzzify([TEMP], [x]) == fuzzify([TEMP], [min(max(x, lo), hi)])


@given(st.floats(0, 100), st.floats(0.05, 1.0))
def test_argmax_scale_invariance(x, scale):
    scaled = LinguisticVariable("t", (0, 100), tuple(
        FuzzyTerm(t.name, tuple((p, d * scale) for p, d in t.points)) for t in (LOW, HIGH, TRI)
    ))
    plain = LinguisticVariable("t", (0, 100), (LOW, HIGH, TRI))
    assert fuzzify([scaled], [x]) == fuzzify([plain], [x])


@given(st.lists(st.floats(-10, 110), min_size=1, max_size=6))
def test_output_shape(values):
    out = fuzzify([TEMP] * len(values), values)
    assert len(out) == len(values)
    assert set(out) <= {"low", "high"}


@pytest.mark.parametrize("build", [
    lambda: FuzzyTerm("x", ((0, 1), (0, 0))),
    lambda: FuzzyTerm("x", ((0, 1.5),)),
    lambda: LinguisticVariable("v", (10, 0), (LOW,)),
    lambda: LinguisticVariable("v", (0, 100), ()),
    lambda: LinguisticVariable("v", (0, 40), (LOW,)),  # breakpoint 50 outside universe
    lambda: LinguisticVariable("v", (0, 100), (FuzzyTerm("a", ((0, 1), (20, 0))),
                                               FuzzyTerm("b", ((60, 0), (100, 1))))),
])
def test_invalid_definitions(build):
    with pytest.raises(ValueError):
        build()


def test_config_section():
    doc = {"variables": [{"name": "temp", "universe": [0, 100], "clamp": True, "terms": [
        {"name": "low", "points": [[0, 1], [50, 0]]}, {"name": "high", "points": [[0, 0], [50, 1]]}]}]}
    (var,) = variables_from_dict(doc)
    assert var == TEMP
    doc["variables"][0]["terms"][1]["points"] = [[0, 0], [150, 1]]
    with pytest.raises(ValidationError):
        variables_from_dict(doc)
