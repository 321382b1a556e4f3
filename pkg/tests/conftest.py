import random
from itertools import product

import pytest
from hypothesis import strategies as st

from realbott.core import BottMatrix, Permutation, local_complement, relabel, slide, slide_pairs


def all_upper(n):
    return [BottMatrix.from_upper_bits(n, p) for p in range(1 << (n * (n - 1) // 2))]


def all_dags(n):
    """Every labelled acyclic digraph on ``n`` vertices (all Bott matrices)."""
    out = []
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((0, 1), repeat=len(cells)):
        rows = [0] * n
        for (i, j), b in zip(cells, bits):
            if b:
                rows[i] |= 1 << j
        try:
            out.append(BottMatrix(rows, n))
        except ValueError:
            pass
    return out


def random_bott(rng, n, density=None):
    p = rng.random() if density is None else density
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(BottMatrix(rows, n), Permutation(perm))


def random_walk(rng, a, steps):
    """Apply ``steps`` random operations (relabel, local complement, slide)."""
    for _ in range(steps):
        kind = rng.randrange(3)
        if kind == 0:
            perm = list(range(a.n))
            rng.shuffle(perm)
            a = relabel(a, Permutation(perm))
        elif kind == 1:
            a = local_complement(a, rng.randrange(a.n))
        else:
            pairs = slide_pairs(a)
            if pairs:
                a = slide(a, *rng.choice(pairs))
    return a


# Two five-vertex digraphs with equal invariants but different classes.
# Vertices a..e are 0..4.
COLLISION_LEFT = BottMatrix.from_arcs(5, [(0, 1), (1, 2), (3, 4), (3, 2)])
COLLISION_RIGHT = BottMatrix.from_arcs(5, [(0, 1), (1, 2), (3, 4), (0, 4)])


@st.composite
def bott_matrices(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    perm = draw(st.permutations(range(n)))
    return relabel(BottMatrix.from_upper_bits(n, bits), Permutation(perm))


@pytest.fixture
def rng():
    return random.Random(20240517)


# ---------------------------------------------------------------------------
# One pass/fail line per acceptance criterion in the terminal summary.
# ---------------------------------------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and not report.passed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        mark = {"passed": "PASS", "skipped": "SKIP"}.get(outcome, "FAIL")
        terminalreporter.write_line(f"[{mark}] {name}")
