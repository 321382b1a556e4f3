"""Linear algebra over Z/2 on bit-packed rows.

A row is a Python int whose bit ``j`` holds the entry in column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Gf2Matrix:
    """An ``r x c`` matrix over Z/2 stored as ``r`` packed rows."""

    r: int
    c: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.r < 0 or self.c < 0:
            raise ValueError("negative dimension")
        if len(self.rows) != self.r:
            raise ValueError(f"expected {self.r} rows, got {len(self.rows)}")
        limit = 1 << self.c
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValueError(f"row {row:#x} does not fit in {self.c} columns")

    @classmethod
    def from_lists(cls, data, c=None):
        data = [list(row) for row in data]
        if c is None:
            c = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != c:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, b in enumerate(row) if int(b) & 1))
        return cls(len(rows), c, tuple(rows))

    @classmethod
    def identity(cls, k):
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def zeros(cls, r, c):
        return cls(r, c, (0,) * r)

    def to_lists(self):
        return [[(row >> j) & 1 for j in range(self.c)] for row in self.rows]

    def submatrix(self, row_idx, col_idx) -> "Gf2Matrix":
        return Gf2Matrix(len(row_idx), len(col_idx),
                         tuple(select_bits(self.rows[i], col_idx) for i in row_idx))


def select_bits(row: int, cols) -> int:
    """Pack the bits of ``row`` at positions ``cols`` into a new row."""
    out = 0
    for k, j in enumerate(cols):
        if (row >> j) & 1:
            out |= 1 << k
    return out


def rank_rows(rows) -> int:
    """Rank of a collection of packed rows (XOR basis insertion)."""
    basis = {}  # leading bit -> reduced row
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def rank_gf2(m: Gf2Matrix) -> int:
    return rank_rows(m.rows)


def rref_gf2(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen at the lowest column index first; zero rows are moved
    to the bottom, so the result has the same shape as ``m``.
    """
    rows, pivots, _ = rref_rows(m.rows, m.c)
    return Gf2Matrix(m.r, m.c, tuple(rows)), pivots


def rref_rows(rows, ncols):
    """Gauss-Jordan elimination on packed rows.

    Returns ``(rows, pivots, ops)`` where ``ops`` is the list of elementary
    operations applied, as ``("swap", a, b)`` or ``("add", src, dst)``
    (row ``src`` added into row ``dst``), in order.
    """
    rows = list(rows)
    ops = []
    pivots = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            ops.append(("swap", r, piv))
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
                ops.append(("add", r, i))
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots, ops


def nullspace_basis(columns) -> list[int]:
    """Basis of ``{x : sum_j x_j * columns[j] = 0}`` as packed vectors.

    ``columns[j]`` is packed column ``j``; returned vectors are indexed by
    column.
    """
    ncols = len(columns)
    basis = {}  # leading bit of the column image -> (image, combination)
    kernel = []
    for j, col in enumerate(columns):
        v, comb = col, 1 << j
        while v:
            top = v.bit_length() - 1
            hit = basis.get(top)
            if hit is None:
                basis[top] = (v, comb)
                break
            v ^= hit[0]
            comb ^= hit[1]
        if not v:
            kernel.append(comb)
    assert len(kernel) == ncols - len(basis)
    return kernel


def det_gf2(rows, k) -> int:
    """Determinant of a ``k x k`` matrix over Z/2 (1 iff full rank)."""
    return int(rank_rows(rows) == k)
