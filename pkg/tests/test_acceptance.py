"""Exit criteria for the build, one test per criterion with its tolerance."""

import itertools
import json
import random
import time

import pytest

from assocproc.cli import main
from assocproc.core import Alphabet
from assocproc.costmodel import CostParams, compare, memory_flexible, memory_rigid, time_flexible, time_rigid
from assocproc.oracle import naive_match
from assocproc.pamu import flash, indicator_match, match_sequence
from conftest import ABCDE, DATA, FIG4, random_store

ABC = Alphabet(("a", "b", "c"))
ALL_INPUTS = [list(w) for n in range(5) for w in itertools.product("abc", repeat=n)]
STORE_COUNT = 100


def stores():
    for seed in range(STORE_COUNT):
        for correction in (True, False):
            rng = random.Random(seed)
            yield correction, random_store(rng, equal_lengths=not correction)


def run_cli(*argv):
    import io
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out=out, err=err), out.getvalue()


def test_c1_fig4_reproduction(criterion):
    criterion("C1 Fig 4 flashing: 3 lanes, depth 5, ends (5,3,4), 3/3 self-accepted")
    t0 = time.perf_counter()
    m = flash(FIG4, ABCDE, correction=True)
    assert (m.lane_count, m.depth, m.end_marker) == (3, 5, (5, 3, 4))
    for lane, e in enumerate(FIG4, 1):
        assert match_sequence(m, list(e.symbols)).accepted == {lane}
    assert time.perf_counter() - t0 < 1.0


def test_c2_interference(criterion):
    criterion("C2 interference: (e,z,a,b) -> E2 with one K1=0 step; (d,d,d) -> none")
    t0 = time.perf_counter()
    m = flash(FIG4, ABCDE, correction=True)
    report = match_sequence(m, list("ezab"))
    assert report.accepted == {2}
    assert sum(1 for o in report.trace if not o.k1) == 1
    assert match_sequence(m, list("ddd")).accepted == frozenset()
    assert time.perf_counter() - t0 < 1.0


def test_c3_oracle_equivalence(criterion):
    criterion(f"C3 automaton == naive_match on {len(ALL_INPUTS)} inputs x {STORE_COUNT} stores x 2 settings")
    assert len(ALL_INPUTS) == 121
    t0 = time.perf_counter()
    checked = 0
    for correction, store in stores():
        m = flash(store, ABC, correction)
        for word in ALL_INPUTS:
            assert match_sequence(m, word).accepted == naive_match(word, store, correction).accepted, (
                store, word, correction)
            checked += 1
    assert checked == 121 * STORE_COUNT * 2
    assert time.perf_counter() - t0 < 30.0


def test_c4_indicator_equivalence(criterion):
    criterion("C4 lane acceptance == indicator_match on consumed subsequence, same exhaustive set")
    t0 = time.perf_counter()
    for correction, store in stores():
        m = flash(store, ABC, correction)
        for word in ALL_INPUTS:
            report = match_sequence(m, word)
            consumed = report.consumed
            for lane, e in enumerate(store, 1):
                bit = indicator_match(e, consumed[:e.length])
                assert (lane in report.accepted) == (bit == 1), (store, word, lane)
    assert time.perf_counter() - t0 < 30.0


def test_c5_cost_identities(criterion):
    criterion("C5 T_rigid=30, T_flex=54, delta_time = tau*gamma*(n-1) on 2560 grid points")
    t0 = time.perf_counter()
    base = CostParams(1, 8, 4, 1, (10,), (5,), 20, 4)
    assert time_rigid(base) == 30 and time_flexible(base) == 54
    points = 0
    for tau, gamma, n in itertools.product(range(1, 5), range(1, 65), range(1, 11)):
        r = compare(CostParams(tau, gamma, n, 1, (10,), (5,), 20, 4))
        assert r.delta_time == tau * gamma * (n - 1)
        points += 1
    assert points == 2560
    assert time.perf_counter() - t0 < 1.0


def test_c6_memory_model(criterion):
    criterion("C6 V_flex=1250, V_rigid=1002, delta=248, L*=14")
    t0 = time.perf_counter()
    p = CostParams(1, 8, 4, 1, (10,), (5,), 20, 4)
    assert memory_flexible(p) == 1250 and memory_rigid(p) == 1002
    r = compare(p)
    assert r.delta_memory == 248 and r.crossover_rules == 14
    code, out = run_cli("cost", "--params", str(DATA / "cost_baseline.json"))
    assert code == 0 and dict(l.split() for l in out.splitlines())["L*"] == "14"
    assert time.perf_counter() - t0 < 1.0


def test_c7_full_pipeline(criterion):
    criterion("C7 fuzzifier pipeline: control word exit 0, no match exit 2, ambiguous exit 3")
    t0 = time.perf_counter()
    pipe = str(DATA / "pipeline.json")
    cfg = json.loads((DATA / "pipeline.json").read_text())
    assert len(cfg["fuzzifier"]["variables"][0]["terms"]) == 2 and len(cfg["classes"]) == 2

    code, out = run_cli("run", "--config", pipe, "--numeric", "10 90 10 90 10")
    assert code == 0 and out.strip() == "mode=full class=brake word=1010"
    code, out = run_cli("run", "--config", pipe, "--numeric", "90 10 10 10 10")
    assert code == 2 and "class=NONE" in out
    code, out = run_cli("run", "--config", str(DATA / "pipeline_ambiguous.json"), "--numeric", "90 10 90 10 10")
    assert code == 3 and "class=AMBIGUOUS lanes=[1,2]" in out
    assert time.perf_counter() - t0 < 1.0
