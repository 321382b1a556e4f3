from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import all_dags, all_upper, bott_matrices, random_bott
from realbott.canon import bott_canon, bott_equivalent, orbit_forms
from realbott.core import BottMatrix, local_complement, slide
from realbott.decompose import (connected_components, decompose, is_indecomposable,
                                max_components_oracle, roots)
from realbott.errors import DomainError
from realbott.gf2 import rank_rows, select_bits
from realbott.invariants import level_structure


def M(text):
    return BottMatrix.from_bin(text)


# Three-vertex digraphs 1->2 ; 3->2 ; both, relabelled 0..2.
POINT_PLUS_ARC = BottMatrix.from_arcs(3, [(0, 1)])
ARC_PLUS_POINT = BottMatrix.from_arcs(3, [(2, 1)])
CHERRY = BottMatrix.from_arcs(3, [(0, 1), (2, 1)])
PATH = M("010/001/000")


def test_roots():
    assert roots(BottMatrix.zeros(3)) == {0, 1, 2}
    assert roots(PATH) == {0}
    assert roots(CHERRY) == {0, 2}


def test_connected_components():
    assert len(connected_components(BottMatrix.zeros(3))) == 3
    assert len(connected_components(CHERRY)) == 1
    assert len(connected_components(POINT_PLUS_ARC)) == 2
    assert len(connected_components(ARC_PLUS_POINT)) == 2


def test_cherry_splits():
    assert bott_equivalent(CHERRY, POINT_PLUS_ARC)
    assert bott_equivalent(CHERRY, ARC_PLUS_POINT)
    d = decompose(CHERRY)
    assert d.isolated_count == 1
    assert d.factor_keys() == ("2:1",)
    assert d.to_dict() == {"isolated": 1, "factors": ["2:1"]}
    assert not is_indecomposable(CHERRY)
    assert max_components_oracle(CHERRY) == 2


def test_zero_and_path():
    for n in (1, 3, 5):
        d = decompose(BottMatrix.zeros(n))
        assert d.isolated_count == n and d.factors == ()
    assert max_components_oracle(BottMatrix.zeros(3)) == 3
    assert is_indecomposable(BottMatrix.zeros(1))
    assert is_indecomposable(PATH)
    assert max_components_oracle(PATH) == 1


def test_two_paths():
    d = decompose(PATH.direct_sum(PATH))
    assert d.isolated_count == 0
    assert d.factor_keys() == ("3:5", "3:5")


def test_oracle_size_limit():
    with pytest.raises(DomainError):
        max_components_oracle(BottMatrix.zeros(6))


def _check_witness(a, d, full=True):
    w = d.witness
    if full:  # the orbit of a large input is too big to enumerate
        assert bott_equivalent(a, w)
    sizes = [f.canonical.n for f in d.factors]
    assert sum(sizes) + d.isolated_count == a.n
    # block diagonal: blocks in order, then isolated vertices
    starts, pos = [], 0
    for b in d.blocks:
        starts.append((pos, pos + len(b)))
        pos += len(b)
    for i, j in w.arcs():
        assert any(lo <= i < hi and lo <= j < hi for lo, hi in starts)
    got = Counter(bott_canon(w.induced(range(lo, hi))).canonical.key() for lo, hi in starts)
    assert got == Counter(f.canonical.key() for f in d.factors)


@settings(max_examples=80, deadline=None)
@given(bott_matrices(max_n=7))
def test_witness_structure(a):
    _check_witness(a, decompose(a))


def test_witness_structure_larger(rng):
    for _ in range(20):
        a = random_bott(rng, 6, 0.3).direct_sum(random_bott(rng, 5, 0.5))
        _check_witness(a, decompose(a), full=False)


@given(bott_matrices(max_n=8))
def test_isolated_count_formula(a):
    l0 = sorted(roots(a))
    rest = [v for v in range(a.n) if v not in roots(a)]
    expected = len(l0) - rank_rows(select_bits(a.rows[i], rest) for i in l0)
    assert decompose(a).isolated_count == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_factors_constant_on_classes(n):
    by_class = {}
    for a in all_upper(n):
        c = bott_canon(a).canonical
        d = decompose(a)
        sig = (d.isolated_count, tuple(d.factor_keys()))
        assert by_class.setdefault(c, sig) == sig
        assert len(d.factors) + d.isolated_count == max_components_oracle(a)


def test_factors_are_indecomposable(rng):
    for _ in range(60):
        a = random_bott(rng, rng.randint(2, 5))
        for f in decompose(a).factors:
            assert is_indecomposable(f.canonical)
            assert max_components_oracle(f.canonical) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_root_slides_commute(n):
    for a in all_dags(n):
        rs = sorted(roots(a))
        nonroot = [v for v in range(n) if v not in rs]
        cols = a.columns()
        for u in rs:
            for v in rs:
                if u == v:
                    continue
                for x in range(n):
                    assert slide(local_complement(a, x), u, v) == \
                        local_complement(slide(a, u, v), x)
                for x in nonroot:
                    for y in nonroot:
                        if x != y and cols[x] == cols[y]:
                            assert slide(slide(a, x, y), u, v) == slide(slide(a, u, v), x, y)


def test_roots_fixed_by_slides():
    a = M("00110/00011/00000/00000/00000")
    for f in orbit_forms(a):
        b = BottMatrix(f, 5)
        assert len(roots(b)) == level_structure(a).type_vector[0]
