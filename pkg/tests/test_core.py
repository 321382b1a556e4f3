from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_dags, bott_matrices, random_bott
from realbott.core import (BottMatrix, Permutation, is_bott, local_complement, relabel, slide,
                           slide_pairs)
from realbott.errors import MalformedInput, NotBottMatrix, PreconditionViolated, SizeMismatch
from realbott.gf2 import Gf2Matrix, nullspace_basis, rank_gf2, rref_gf2


def M(text):
    return BottMatrix.from_bin(text)


# --- is_bott ----------------------------------------------------------------


def test_is_bott_examples():
    assert is_bott(["000", "000", "000"])
    assert not is_bott(["010", "001", "100"])
    assert is_bott(["010", "001", "000"])


def test_is_bott_rejects_loop_and_bad_shapes():
    assert not is_bott(["10", "00"])
    with pytest.raises(SizeMismatch):
        is_bott(["010", "001"], n=3)
    with pytest.raises(SizeMismatch):
        is_bott(["01", "001"])
    with pytest.raises(MalformedInput):
        is_bott(["02", "00"])
    with pytest.raises(SizeMismatch):
        is_bott([], n=0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_is_bott_matches_principal_minors_exhaustively(n):
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((0, 1), repeat=len(cells)):
        rows = [0] * n
        for (i, j), b in zip(cells, bits):
            rows[i] |= b << j
        is_bott(rows, n, check_minors=True)  # asserts agreement internally


def test_is_bott_accepts_numpy():
    assert is_bott(np.array([[0, 1], [0, 0]]))
    assert not is_bott(np.array([[0, 1], [1, 0]]))


def test_constructor_rejects_cycle():
    with pytest.raises(NotBottMatrix):
        M("01/10")


def test_immutable():
    a = M("01/00")
    with pytest.raises(AttributeError):
        a.n = 3


# --- Op1 --------------------------------------------------------------------


def test_relabel_examples():
    a = M("010/001/000")
    assert relabel(a, Permutation.identity(3)) == a
    assert relabel(M("010/000/000"), Permutation.transposition(3, 1, 2)) == M("001/000/000")
    assert relabel(a, Permutation.reversal(3)) == M("000/100/010")


def test_relabel_size_mismatch():
    with pytest.raises(SizeMismatch):
        relabel(M("01/00"), Permutation.identity(3))


@given(bott_matrices(max_n=7), st.data())
def test_relabel_index_relation(a, data):
    p = Permutation(data.draw(st.permutations(range(a.n))))
    b = relabel(a, p)
    for i in range(a.n):
        for j in range(a.n):
            assert b.entry(p[i], p[j]) == a.entry(i, j)


# --- Op2 --------------------------------------------------------------------


def test_local_complement_examples():
    assert local_complement(M("011/001/000"), 1) == M("010/001/000")
    assert local_complement(BottMatrix.zeros(3), 2) == BottMatrix.zeros(3)
    # row k zero: nothing is added
    a = M("011/000/000")
    assert local_complement(a, 2) == a


def test_local_complement_column_formula():
    # column j of the result is A_j + A[k][j] * A_k
    a = M("01100/00110/00011/00001/00000")
    for k in range(5):
        b = local_complement(a, k)
        ca, cb = a.columns(), b.columns()
        for j in range(5):
            assert cb[j] == ca[j] ^ (ca[k] if a.entry(k, j) else 0)


def test_local_complement_out_of_range():
    with pytest.raises(IndexError):
        local_complement(M("01/00"), 2)


# --- Op3 --------------------------------------------------------------------


def test_slide_examples():
    assert slide(M("001/001/000"), 0, 1) == M("001/000/000")
    a = M("000/001/000")
    assert slide(a, 0, 1) == a  # row 0 is zero


def test_slide_precondition():
    # columns 0 and 1 of 011/000/000 differ
    with pytest.raises(PreconditionViolated):
        slide(M("011/000/000"), 0, 1)
    with pytest.raises(PreconditionViolated):
        slide(M("011/000/000"), 1, 1)
    # columns 1 and 2 are both (1,0,0): the slide is defined (and trivial)
    assert slide(M("011/000/000"), 1, 2) == M("011/000/000")


# --- properties -------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_involutions_exhaustive(n):
    for a in all_dags(n):
        for k in range(n):
            b = local_complement(a, k)
            assert is_bott(b.rows, n)
            assert local_complement(b, k) == a
        for l, m in slide_pairs(a):
            b = slide(a, l, m)
            assert is_bott(b.rows, n)
            cb = b.columns()
            assert cb[l] == cb[m]
            assert slide(b, l, m) == a


@pytest.mark.parametrize("n", [2, 3, 4])
def test_equivariance_exhaustive(n):
    perms = [Permutation(p) for p in permutations(range(n))]
    for a in all_dags(n):
        for p in perms:
            pa = relabel(a, p)
            for k in range(n):
                assert relabel(local_complement(a, k), p) == local_complement(pa, p[k])
            for l, m in slide_pairs(a):
                assert relabel(slide(a, l, m), p) == slide(pa, p[l], p[m])


def test_equivariance_random(rng):
    for _ in range(300):
        n = rng.randint(5, 8)
        a = random_bott(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        p = Permutation(perm)
        pa = relabel(a, p)
        k = rng.randrange(n)
        assert relabel(local_complement(a, k), p) == local_complement(pa, p[k])
        for l, m in slide_pairs(a):
            assert relabel(slide(a, l, m), p) == slide(pa, p[l], p[m])


# --- formats ----------------------------------------------------------------


def test_hex_format():
    assert M("010/001/000").to_hex() == "3:5"
    assert M("011/001/000").to_hex() == "3:7"
    assert BottMatrix.from_hex("3:5") == M("010/001/000")
    assert BottMatrix.zeros(1).to_hex() == "1:0"
    assert BottMatrix.from_hex("1:") == BottMatrix.zeros(1)
    # 6 upper bits for n = 4: two hex digits, zero padded
    assert BottMatrix.from_upper_bits(4, 0b100000).to_hex() == "4:20"
    with pytest.raises(PreconditionViolated):
        M("000/100/000").to_hex()
    with pytest.raises(MalformedInput):
        BottMatrix.from_hex("35")


@given(bott_matrices(max_n=9))
def test_bin_round_trip(a):
    assert BottMatrix.from_bin(a.to_bin()) == a
    assert BottMatrix.from_numpy(a.to_numpy()) == a


@settings(max_examples=50)
@given(st.integers(1, 12), st.data())
def test_hex_round_trip(n, data):
    bits = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    a = BottMatrix.from_upper_bits(n, bits)
    assert a.upper_bits() == bits
    assert BottMatrix.from_hex(a.to_hex()) == a


# --- GF(2) ------------------------------------------------------------------


def _span_size(rows):
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span)


def test_rank_examples():
    assert rank_gf2(Gf2Matrix.zeros(3, 4)) == 0
    assert rank_gf2(Gf2Matrix.identity(5)) == 5
    assert rank_gf2(Gf2Matrix.from_lists([[0, 1, 0], [0, 0, 1], [0, 0, 0]])) == 2


@given(st.lists(st.integers(0, 255), max_size=10))
def test_rank_against_span_enumeration(rows):
    m = Gf2Matrix(len(rows), 8, tuple(rows))
    assert 2 ** rank_gf2(m) == _span_size(rows)


def test_rref_examples():
    z, piv = rref_gf2(Gf2Matrix.zeros(2, 3))
    assert z.rows == (0, 0) and piv == []
    r, piv = rref_gf2(Gf2Matrix.from_lists([[1], [1]]))
    assert r.to_lists() == [[1], [0]] and piv == [0]
    r, piv = rref_gf2(Gf2Matrix.from_lists([[1, 1], [0, 1]]))
    assert r.to_lists() == [[1, 0], [0, 1]] and piv == [0, 1]


@given(st.lists(st.integers(0, 63), max_size=8))
def test_rref_properties(rows):
    m = Gf2Matrix(len(rows), 6, tuple(rows))
    r, piv = rref_gf2(m)
    span = {0}
    for x in rows:
        span |= {s ^ x for s in span}
    rspan = {0}
    for x in r.rows:
        rspan |= {s ^ x for s in rspan}
    assert span == rspan
    assert len(piv) == rank_gf2(m)
    for i, p in enumerate(piv):
        row = r.rows[i]
        assert row & ((1 << p) - 1) == 0  # leading entry at p
        for k, q in enumerate(piv):
            assert ((r.rows[k] >> p) & 1) == (k == i)
        assert all(x == 0 for x in r.rows[len(piv):])


@given(st.lists(st.integers(0, 31), min_size=1, max_size=8))
def test_nullspace(cols):
    kernel = nullspace_basis(cols)
    assert len(kernel) == len(cols) - rank_gf2(Gf2Matrix(len(cols), 5, tuple(cols)))
    for v in kernel:
        acc = 0
        for j, c in enumerate(cols):
            if (v >> j) & 1:
                acc ^= c
        assert acc == 0
