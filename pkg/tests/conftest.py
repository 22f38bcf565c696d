import random
from pathlib import Path

import pytest

from assocproc.core import Alphabet, ClassLabel, EtalonSet, parse_config
from assocproc.pamu import flash

DATA = Path(__file__).parent / "data"

W1, W2, W3 = ClassLabel("w1", 1), ClassLabel("w2", 2), ClassLabel("w3", 3)
ABCDE = Alphabet(("a", "b", "c", "d", "e"))
E1 = EtalonSet("E1", W1, tuple("abcde"))
E2 = EtalonSet("E2", W2, tuple("eab"))
E3 = EtalonSet("E3", W3, tuple("bade"))
FIG4 = (E1, E2, E3)


def random_store(rng: random.Random, alphabet=("a", "b", "c"), max_lanes=5, max_len=4,
                 equal_lengths=False, distinct=False):
    lanes = rng.randint(1, max_lanes)
    fixed = rng.randint(1, max_len)
    if distinct and equal_lengths:
        lanes = min(lanes, len(alphabet) ** fixed)
    words = []
    while len(words) < lanes:
        n = fixed if equal_lengths else rng.randint(1, max_len)
        w = tuple(rng.choice(alphabet) for _ in range(n))
        if distinct and w in words:
            continue
        words.append(w)
    labels = [ClassLabel(f"k{i}", i) for i in range(1, 4)]
    return tuple(EtalonSet(f"S{i}", rng.choice(labels), w) for i, w in enumerate(words, 1))


@pytest.fixture
def fig4_matrix():
    return flash(FIG4, ABCDE, correction=True)


@pytest.fixture
def fig4_config():
    return parse_config((DATA / "fig4.json").read_text())


ACCEPTANCE_LINES: list[tuple[str, str]] = []
_OUTCOME = pytest.StashKey[bool]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    def record(label: str):
        ACCEPTANCE_LINES.append((request.node.nodeid, label))
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.stash[_OUTCOME] = rep.passed


def pytest_runtest_teardown(item):
    ok = item.stash.get(_OUTCOME, False)
    for i, (nodeid, label) in enumerate(ACCEPTANCE_LINES):
        if nodeid == item.nodeid:
            ACCEPTANCE_LINES[i] = (nodeid, f"{'PASS' if ok else 'FAIL'}  {label}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
