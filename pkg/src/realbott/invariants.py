"""Invariants of Bott equivalence classes.

Every quantity here is unchanged by relabelling, local complementation and
slides: level sizes (the type), GF(2) rank, odd height, sibling class sizes
per level, cut-ranks of unions of levels, and the rational Betti numbers.
:func:`fingerprint` bundles them into one hashable value.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import BottMatrix, columns_of, iter_bits, topological_order
from .errors import BudgetExceeded, NotAcyclic
from .gf2 import nullspace_basis, rank_rows, select_bits

INFINITY = math.inf

KERNEL_BUDGET_BITS = 30
LEVEL_BUDGET = 20


def level_of(n, rows, cols=None):
    """Per-vertex level: arcs on a longest directed path ending at the vertex."""
    order = topological_order(n, rows)
    if order is None:
        raise NotAcyclic("digraph has a directed cycle")
    if cols is None:
        cols = columns_of(n, rows)
    lev = [0] * n
    for v in order:
        c = cols[v]
        if c:
            lev[v] = 1 + max(lev[u] for u in iter_bits(c))
    return lev


@dataclass(frozen=True)
class LevelStructure:
    levels: tuple[tuple[int, ...], ...]
    type_vector: tuple[int, ...]


def level_structure(a: BottMatrix) -> LevelStructure:
    lev = level_of(a.n, a.rows)
    depth = max(lev) + 1
    levels = tuple(tuple(v for v in range(a.n) if lev[v] == k) for k in range(depth))
    type_vector = tuple(len(lv) for lv in levels) + (0,) * (a.n - depth)
    return LevelStructure(levels, type_vector)


def odd_height(a: BottMatrix):
    """Largest level holding a vertex of odd out-degree, ``INFINITY`` if none."""
    lev = level_of(a.n, a.rows)
    odd = [lev[v] for v, row in enumerate(a.rows) if row.bit_count() % 2]
    return max(odd) if odd else INFINITY


def sibling_classes(a: BottMatrix):
    """Vertices grouped by identical in-neighbourhoods (identical columns)."""
    groups = {}
    for j, c in enumerate(a.columns()):
        groups.setdefault(c, []).append(j)
    return sorted(groups.values())


def sibling_profile(a: BottMatrix) -> tuple[tuple[int, ...], ...]:
    """For each level, the sorted sizes of the sibling classes inside it."""
    lev = level_of(a.n, a.rows)
    per_level = [[] for _ in range(max(lev) + 1)]
    for cls in sibling_classes(a):
        per_level[lev[cls[0]]].append(len(cls))
    return tuple(tuple(sorted(sizes)) for sizes in per_level)


def orientable(a: BottMatrix) -> bool:
    return all(row.bit_count() % 2 == 0 for row in a.rows)


def symplectic(a: BottMatrix) -> bool:
    return all(size % 2 == 0 for size in Counter(a.columns()).values())


def betti(a: BottMatrix) -> tuple[int, ...]:
    """``b_i`` = number of ``i``-subsets of columns summing to zero.

    Enumerates the null space of ``x -> A x`` from a basis, so the cost is
    ``2**(n - rank)`` rather than ``2**n``.
    """
    kernel = nullspace_basis(a.columns())
    dim = len(kernel)
    if dim > KERNEL_BUDGET_BITS:
        raise BudgetExceeded(f"kernel dimension {dim} exceeds 2^{KERNEL_BUDGET_BITS}")
    low, high = kernel[:_SPAN_CHUNK_BITS], kernel[_SPAN_CHUNK_BITS:]
    span = np.zeros(1, dtype=np.uint64)
    for k in low:
        span = np.concatenate([span, span ^ np.uint64(k)])
    counts = np.zeros(a.n + 1, dtype=np.int64)
    # Walk the high part in Gray-code order, one XOR per chunk.
    offset = 0
    for step in range(1 << len(high)):
        if step:
            offset ^= high[(step & -step).bit_length() - 1]
        weights = _popcount64(span ^ np.uint64(offset))
        counts += np.bincount(weights, minlength=a.n + 1)
    return tuple(int(c) for c in counts)


_SPAN_CHUNK_BITS = 20


def _popcount64(v):
    v = v.astype(np.uint64)
    out = np.zeros(v.shape, dtype=np.int64)
    for shift in range(0, 64, 8):
        out += _BYTE_POPCOUNT[((v >> np.uint64(shift)) & np.uint64(0xFF)).astype(np.intp)]
    return out


_BYTE_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def betti_bruteforce(a: BottMatrix) -> tuple[int, ...]:
    """Betti numbers straight from the subset count, over all ``2**n`` subsets."""
    cols = a.columns()
    counts = [0] * (a.n + 1)
    for size in range(a.n + 1):
        for subset in combinations(range(a.n), size):
            acc = 0
            for j in subset:
                acc ^= cols[j]
            if acc == 0:
                counts[size] += 1
    return tuple(counts)


def cut_rank(a: BottMatrix, vertices) -> int:
    """Rank of the submatrix with rows ``vertices`` and the other columns."""
    vs = set(vertices)
    rest = [j for j in range(a.n) if j not in vs]
    return rank_rows(select_bits(a.rows[i], rest) for i in sorted(vs))


def cutrank_profile(a: BottMatrix):
    """Cut-ranks of every union of levels, and ranks between consecutive levels.

    Returns ``(by_mask, consecutive)``: ``by_mask`` maps a bitmask of level
    indices to the cut-rank of the union of those levels; ``consecutive[j]``
    is the rank of the block from level ``j`` to level ``j + 1``.
    """
    ls = level_structure(a).levels
    t = len(ls)
    if t > LEVEL_BUDGET:
        raise BudgetExceeded(f"{t} levels exceeds the budget of {LEVEL_BUDGET}")
    by_mask = {}
    for mask in range(1 << t):
        xs = [v for k in iter_bits(mask) for v in ls[k]]
        by_mask[mask] = cut_rank(a, xs)
    consecutive = tuple(
        rank_rows(select_bits(a.rows[i], ls[j + 1]) for i in ls[j]) for j in range(t - 1))
    return by_mask, consecutive


@dataclass(frozen=True)
class InvariantFingerprint:
    type_vector: tuple[int, ...]
    rank: int
    odd_height: float | int
    sibling_profile: tuple[tuple[int, ...], ...]
    cutrank_levels: tuple[tuple[int, int], ...]
    consecutive_ranks: tuple[int, ...]
    betti: tuple[int, ...]
    orientable: bool
    symplectic: bool

    def to_dict(self):
        oh = self.odd_height
        return {
            "type": list(self.type_vector),
            "rank": self.rank,
            "odd_height": "inf" if oh == INFINITY else oh,
            "sibling_profile": [list(s) for s in self.sibling_profile],
            "cutrank_levels": {str(m): r for m, r in self.cutrank_levels},
            "consecutive_ranks": list(self.consecutive_ranks),
            "betti": list(self.betti),
            "orientable": self.orientable,
            "symplectic": self.symplectic,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d):
        oh = d["odd_height"]
        return cls(
            type_vector=tuple(d["type"]),
            rank=d["rank"],
            odd_height=INFINITY if oh == "inf" else int(oh),
            sibling_profile=tuple(tuple(s) for s in d["sibling_profile"]),
            cutrank_levels=tuple(sorted((int(m), r) for m, r in d["cutrank_levels"].items())),
            consecutive_ranks=tuple(d["consecutive_ranks"]),
            betti=tuple(d["betti"]),
            orientable=d["orientable"],
            symplectic=d["symplectic"],
        )


def fingerprint(a: BottMatrix) -> InvariantFingerprint:
    by_mask, consecutive = cutrank_profile(a)
    return InvariantFingerprint(
        type_vector=level_structure(a).type_vector,
        rank=a.rank(),
        odd_height=odd_height(a),
        sibling_profile=sibling_profile(a),
        cutrank_levels=tuple(sorted(by_mask.items())),
        consecutive_ranks=consecutive,
        betti=betti(a),
        orientable=orientable(a),
        symplectic=symplectic(a),
    )
