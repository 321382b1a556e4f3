"""Bott matrices, permutations and the three Bott operations.

A Bott matrix of size ``n`` is stored as ``n`` packed rows: bit ``j`` of
``rows[i]`` is the entry ``A[i][j]``, i.e. the arc ``i -> j`` of the
associated acyclic digraph.  Vertices are 0-indexed.

The operations come in two layers.  The public functions (``relabel``,
``local_complement``, ``slide``) take and return :class:`BottMatrix`
values and check their arguments.  The ``*_rows`` helpers work on bare row
tuples and skip validation; the enumeration code calls them in its inner
loops.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import (MalformedInput, NotBottMatrix, PreconditionViolated,
                     SizeMismatch)
from .gf2 import det_gf2, rank_rows, select_bits

MAX_N = 64


# ---------------------------------------------------------------------------
# Row-level helpers
# ---------------------------------------------------------------------------


def columns_of(n, rows):
    """Packed columns: bit ``i`` of ``cols[j]`` is ``A[i][j]``."""
    cols = [0] * n
    for i, row in enumerate(rows):
        bit = 1 << i
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= bit
            row ^= low
    return cols


def topological_order(n, rows):
    """Kahn's algorithm; returns a vertex order or ``None`` on a cycle."""
    cols = columns_of(n, rows)
    indeg = [c.bit_count() for c in cols]
    stack = [v for v in range(n - 1, -1, -1) if indeg[v] == 0]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        row = rows[v]
        while row:
            low = row & -row
            w = low.bit_length() - 1
            row ^= low
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return order if len(order) == n else None


def iter_bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def relabel_rows(rows, perm):
    """Rows of ``B`` with ``B[perm[i]][perm[j]] = A[i][j]``."""
    out = [0] * len(rows)
    for i, row in enumerate(rows):
        r = 0
        while row:
            low = row & -row
            r |= 1 << perm[low.bit_length() - 1]
            row ^= low
        out[perm[i]] = r
    return tuple(out)


def local_complement_rows(rows, k):
    """Op2 on rows: every in-neighbour of ``k`` gets row ``k`` added."""
    rk = rows[k]
    if not rk:
        return rows
    bit = 1 << k
    return tuple(r ^ rk if r & bit else r for r in rows)


def slide_rows(rows, l, m):
    """Op3 on rows without the precondition check: row ``m`` += row ``l``."""
    out = list(rows)
    out[m] ^= rows[l]
    return tuple(out)


def encoding_key(n, rows):
    """Row-major bit string of the matrix read as a big-endian integer.

    Comparing keys of equal ``n`` is comparing the matrices in row-major
    lexicographic order.
    """
    key = 0
    for row in rows:
        rev = 0
        for j in range(n):
            rev = (rev << 1) | ((row >> j) & 1)
        key = (key << n) | rev
    return key


def is_strictly_upper_rows(rows):
    return all(row >> (i + 1) << (i + 1) == row for i, row in enumerate(rows))


# ---------------------------------------------------------------------------
# Validity
# ---------------------------------------------------------------------------


def _coerce_raw(m, n=None):
    """Turn a raw matrix (rows of 0/1, strings, ndarray or packed ints) into rows."""
    if isinstance(m, BottMatrix):
        return m.n, m.rows
    if isinstance(m, np.ndarray):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise SizeMismatch(f"matrix must be square, got shape {m.shape}")
        m = m.tolist()
    data = list(m)
    size = len(data) if n is None else n
    if size != len(data):
        raise SizeMismatch(f"declared n={size} but {len(data)} rows given")
    rows = []
    for i, row in enumerate(data):
        if isinstance(row, int):
            if row < 0 or row >> size:
                raise SizeMismatch(f"row {i} has bits outside {size} columns")
            rows.append(row)
            continue
        if isinstance(row, str):
            row = row.strip()
        if len(row) != size:
            raise SizeMismatch(f"row {i} has {len(row)} entries, expected {size}")
        packed = 0
        for j, b in enumerate(row):
            b = int(b)
            if b not in (0, 1):
                raise MalformedInput(f"entry ({i},{j}) is {b}, not binary")
            packed |= b << j
        rows.append(packed)
    return size, tuple(rows)


def principal_minors_all_one(n, rows):
    """True iff every principal minor of ``M + I`` is 1 over Z/2.

    Evaluates all ``2**n - 1`` minors; meant as a cross-check only.
    """
    plus_i = [row ^ (1 << i) for i, row in enumerate(rows)]
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            sub = [select_bits(plus_i[i], idx) for i in idx]
            if not det_gf2(sub, size):
                return False
    return True


def is_bott(m, n=None, *, check_minors=False) -> bool:
    """Is ``m`` a Bott matrix, i.e. the adjacency matrix of an acyclic digraph?

    ``m`` may be a sequence of 0/1 rows, of '0'/'1' strings, of packed ints,
    or a square ndarray.  With ``check_minors`` the result is also computed
    through principal minors of ``m + I`` and the two answers must agree.
    """
    size, rows = _coerce_raw(m, n)
    if size < 1:
        raise SizeMismatch("n must be at least 1")
    ok = topological_order(size, rows) is not None
    if check_minors:
        alt = principal_minors_all_one(size, rows)
        assert alt == ok, f"acyclicity ({ok}) and minor test ({alt}) disagree"
    return ok


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------


class BottMatrix:
    """Immutable Bott matrix with bit-packed rows.

    Construct from rows in any form accepted by :func:`is_bott`; the
    constructor rejects cyclic digraphs with :class:`NotBottMatrix`.
    """

    __slots__ = ("n", "rows", "_key")

    def __init__(self, rows, n=None):
        size, packed = _coerce_raw(rows, n)
        if not 1 <= size <= MAX_N:
            raise SizeMismatch(f"n must be in 1..{MAX_N}, got {size}")
        if topological_order(size, packed) is None:
            raise NotBottMatrix("digraph has a directed cycle or a loop")
        object.__setattr__(self, "n", size)
        object.__setattr__(self, "rows", packed)
        object.__setattr__(self, "_key", None)

    @classmethod
    def _trusted(cls, n, rows):
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rows", tuple(rows))
        object.__setattr__(obj, "_key", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("BottMatrix is immutable")

    def __reduce__(self):
        return (BottMatrix._trusted, (self.n, self.rows))

    # constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, n):
        if not 1 <= n <= MAX_N:
            raise SizeMismatch(f"n must be in 1..{MAX_N}, got {n}")
        return cls._trusted(n, (0,) * n)

    @classmethod
    def from_arcs(cls, n, arcs):
        rows = [0] * n
        for i, j in arcs:
            rows[i] |= 1 << j
        return cls(rows, n)

    @classmethod
    def from_upper_bits(cls, n, pattern):
        """Strictly upper triangular matrix from an integer bit pattern.

        The ``n(n-1)/2`` upper entries are read row-major with the first
        entry ``(0, 1)`` as the most significant bit.
        """
        total = n * (n - 1) // 2
        if pattern < 0 or pattern >> total:
            raise SizeMismatch(f"pattern does not fit in {total} bits")
        rows = [0] * n
        pos = total
        for i in range(n):
            for j in range(i + 1, n):
                pos -= 1
                if (pattern >> pos) & 1:
                    rows[i] |= 1 << j
        return cls._trusted(n, tuple(rows))

    def upper_bits(self) -> int:
        if not self.is_strictly_upper():
            raise PreconditionViolated("matrix is not strictly upper triangular")
        pattern = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                pattern = (pattern << 1) | ((self.rows[i] >> j) & 1)
        return pattern

    @classmethod
    def from_numpy(cls, arr):
        return cls(np.asarray(arr, dtype=np.uint8))

    def to_numpy(self):
        out = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                out[i, j] = 1
        return out

    # text formats ---------------------------------------------------------

    @classmethod
    def from_bin(cls, text):
        lines = [ln.strip() for ln in text.replace("/", "\n").splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise MalformedInput("empty matrix text")
        for ln in lines:
            if set(ln) - {"0", "1"}:
                raise MalformedInput(f"bad row {ln!r}")
        return cls(lines)

    def to_bin(self, sep="\n"):
        return sep.join("".join(str((row >> j) & 1) for j in range(self.n))
                        for row in self.rows)

    @classmethod
    def from_hex(cls, text):
        text = text.strip()
        head, sep, digits = text.partition(":")
        if not sep or not head.isdigit():
            raise MalformedInput(f"hex matrix needs an 'n:' prefix, got {text!r}")
        n = int(head)
        if not 1 <= n <= MAX_N:
            raise SizeMismatch(f"n must be in 1..{MAX_N}, got {n}")
        try:
            pattern = int(digits, 16) if digits else 0
        except ValueError:
            raise MalformedInput(f"bad hex digits {digits!r}") from None
        return cls.from_upper_bits(n, pattern)

    def to_hex(self):
        total = self.n * (self.n - 1) // 2
        width = max(1, -(-total // 4))
        return f"{self.n}:{self.upper_bits():0{width}x}"

    # structure ------------------------------------------------------------

    def entry(self, i, j):
        return (self.rows[i] >> j) & 1

    def columns(self):
        return columns_of(self.n, self.rows)

    def column(self, j):
        return self.columns()[j]

    def out_degrees(self):
        return [row.bit_count() for row in self.rows]

    def in_degrees(self):
        return [c.bit_count() for c in self.columns()]

    def arcs(self):
        return [(i, j) for i, row in enumerate(self.rows) for j in iter_bits(row)]

    def is_strictly_upper(self):
        return is_strictly_upper_rows(self.rows)

    def rank(self):
        return rank_rows(self.rows)

    def key(self):
        if self._key is None:
            object.__setattr__(self, "_key", encoding_key(self.n, self.rows))
        return self._key

    def direct_sum(self, other: "BottMatrix") -> "BottMatrix":
        """Disjoint union: ``self`` on vertices ``0..n-1``, ``other`` after."""
        shift = self.n
        rows = self.rows + tuple(r << shift for r in other.rows)
        return BottMatrix._trusted(self.n + other.n, rows)

    def induced(self, vertices) -> "BottMatrix":
        """Induced subdigraph on ``vertices``, relabelled in the given order."""
        vertices = list(vertices)
        return BottMatrix._trusted(
            len(vertices), tuple(select_bits(self.rows[v], vertices) for v in vertices))

    def __eq__(self, other):
        if not isinstance(other, BottMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __lt__(self, other):
        if self.n != other.n:
            return self.n < other.n
        return self.key() < other.key()

    def __repr__(self):
        return f"BottMatrix({self.to_bin('/')!r})"


class Permutation:
    """A bijection of ``{0..n-1}``; ``p[i]`` is the image of ``i``."""

    __slots__ = ("map",)

    def __init__(self, mapping):
        mapping = tuple(int(x) for x in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a permutation: {mapping}")
        object.__setattr__(self, "map", mapping)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, a, b):
        m = list(range(n))
        m[a], m[b] = b, a
        return cls(m)

    @classmethod
    def reversal(cls, n):
        return cls(range(n - 1, -1, -1))

    def __len__(self):
        return len(self.map)

    def __getitem__(self, i):
        return self.map[i]

    def __call__(self, i):
        return self.map[i]

    def __iter__(self):
        return iter(self.map)

    def inverse(self):
        inv = [0] * len(self.map)
        for i, p in enumerate(self.map):
            inv[p] = i
        return Permutation(inv)

    def compose(self, other):
        """``self`` after ``other``: ``i -> self(other(i))``."""
        return Permutation(self.map[j] for j in other.map)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.map == other.map

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"Permutation({list(self.map)})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def relabel(a: BottMatrix, p) -> BottMatrix:
    """Op1: the matrix ``B`` with ``B[p(i)][p(j)] = A[i][j]``."""
    if not isinstance(p, Permutation):
        p = Permutation(p)
    if len(p) != a.n:
        raise SizeMismatch(f"permutation of size {len(p)} for n={a.n}")
    return BottMatrix._trusted(a.n, relabel_rows(a.rows, p.map))


def local_complement(a: BottMatrix, k: int) -> BottMatrix:
    """Op2: add column ``k`` to every column having a 1 in row ``k``.

    On the digraph this toggles every arc from an in-neighbour of ``k`` to
    an out-neighbour of ``k``.
    """
    if not 0 <= k < a.n:
        raise IndexError(f"vertex {k} out of range for n={a.n}")
    return BottMatrix._trusted(a.n, local_complement_rows(a.rows, k))


def slide(a: BottMatrix, l: int, m: int) -> BottMatrix:
    """Op3: add row ``l`` to row ``m``; requires columns ``l`` and ``m`` equal."""
    if not (0 <= l < a.n and 0 <= m < a.n):
        raise IndexError(f"vertices ({l}, {m}) out of range for n={a.n}")
    if l == m:
        raise PreconditionViolated("slide needs two distinct vertices")
    cols = a.columns()
    if cols[l] != cols[m]:
        raise PreconditionViolated(
            f"columns {l} and {m} differ (in-neighbourhoods are not equal)")
    return BottMatrix._trusted(a.n, slide_rows(a.rows, l, m))


def slide_pairs(a: BottMatrix):
    """All ordered pairs ``(l, m)`` on which a slide is defined."""
    groups = {}
    for j, c in enumerate(a.columns()):
        groups.setdefault(c, []).append(j)
    return [(l, m) for g in groups.values() for l in g for m in g if l != m]
