"""Canonical forms under relabelling and under full Bott equivalence.

``iso_canon`` picks, among the labellings that list vertices level by level,
the one whose matrix has the smallest row-major bit string.  The search is
an individualisation-refinement tree: vertices are coloured by (level,
in-degree, out-degree, sibling class size), colours are refined by the
multisets of neighbour colours until stable, and ties are broken by
individualising each vertex of the first non-singleton cell in turn.  Two
vertices with identical in- and out-neighbourhoods are interchangeable, so
only one of them is individualised.  Every choice depends only on the
isomorphism type, which makes the minimum over the leaves canonical.

``bott_canon`` closes an iso-canonical form under local complementations
and slides, re-canonicalising after each move.  This is enough to cover
relabellings as well because both operations commute with relabelling
(``relabel(op(A, k), p) == op(relabel(A, p), p(k))``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import (BottMatrix, Permutation, columns_of, encoding_key,
                   local_complement_rows)
from .errors import OrbitBudgetExceeded, SizeMismatch
from .invariants import level_of

DEFAULT_ORBIT_BUDGET = 10**7


@dataclass(frozen=True)
class IsoCanonForm:
    matrix: BottMatrix
    witness: Permutation  # input vertex -> canonical position


@dataclass(frozen=True)
class BottClassRep:
    canonical: BottMatrix
    orbit_size: int


# ---------------------------------------------------------------------------
# Isomorphism canonical form
# ---------------------------------------------------------------------------


def _dense_rank(keys):
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


class _Searcher:
    __slots__ = ("n", "outs", "ins", "twin", "best_key", "best_pos", "nn")

    def __init__(self, n, rows, cols):
        self.n = n
        self.nn = n * n - 1
        self.outs = [tuple(j for j in range(n) if (rows[v] >> j) & 1) for v in range(n)]
        self.ins = [tuple(i for i in range(n) if (cols[v] >> i) & 1) for v in range(n)]
        self.twin = [(rows[v], cols[v]) for v in range(n)]
        self.best_key = None
        self.best_pos = None

    def refine(self, colors):
        outs, ins = self.outs, self.ins
        ncol = len(set(colors))
        while ncol < self.n:
            sig = [
                (c, tuple(sorted([colors[w] for w in outs[v]])),
                 tuple(sorted([colors[u] for u in ins[v]])))
                for v, c in enumerate(colors)
            ]
            colors = _dense_rank(sig)
            k = len(set(colors))
            if k == ncol:
                break
            ncol = k
        return colors

    def leaf(self, pos):
        key = 0
        nn, n, outs = self.nn, self.n, self.outs
        for v in range(n):
            base = nn - pos[v] * n
            for w in outs[v]:
                key |= 1 << (base - pos[w])
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_pos = pos

    def search(self, colors):
        colors = self.refine(colors)
        n = self.n
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] > 1), None)
        if target is None:
            self.leaf(colors)
            return
        seen_twins = set()
        for v in range(n):
            if colors[v] != target:
                continue
            tw = self.twin[v]
            if tw in seen_twins:
                continue
            seen_twins.add(tw)
            split = [2 * c + (1 if c == target and u != v else 0)
                     for u, c in enumerate(colors)]
            self.search(_dense_rank(split))


def _initial_colors(n, rows, cols):
    lev = level_of(n, rows, cols)
    sib = {}
    for c in cols:
        sib[c] = sib.get(c, 0) + 1
    return _dense_rank([
        (lev[v], cols[v].bit_count(), rows[v].bit_count(), sib[cols[v]])
        for v in range(n)
    ])


@lru_cache(maxsize=1 << 18)
def iso_canon_rows(n, rows):
    """Canonical rows and the position of each input vertex."""
    cols = columns_of(n, rows)
    s = _Searcher(n, rows, cols)
    s.search(_initial_colors(n, rows, cols))
    pos = s.best_pos
    out = [0] * n
    for v in range(n):
        r = 0
        for w in s.outs[v]:
            r |= 1 << pos[w]
        out[pos[v]] = r
    return tuple(out), tuple(pos)


def iso_canon(a: BottMatrix) -> IsoCanonForm:
    if not isinstance(a, BottMatrix):
        a = BottMatrix(a)
    rows, pos = iso_canon_rows(a.n, a.rows)
    return IsoCanonForm(BottMatrix._trusted(a.n, rows), Permutation(pos))


def isomorphic(a: BottMatrix, b: BottMatrix) -> bool:
    return a.n == b.n and iso_canon_rows(a.n, a.rows)[0] == iso_canon_rows(b.n, b.rows)[0]


# ---------------------------------------------------------------------------
# Bott equivalence
# ---------------------------------------------------------------------------


def neighbor_forms(n, rows):
    """Iso-canonical forms one local complementation or slide away from ``rows``.

    Moves that leave ``rows`` unchanged are skipped.
    """
    out = set()
    for k in range(n):
        if rows[k] and any((r >> k) & 1 for r in rows):
            out.add(iso_canon_rows(n, local_complement_rows(rows, k))[0])
    groups = {}
    for j, c in enumerate(columns_of(n, rows)):
        groups.setdefault(c, []).append(j)
    for g in groups.values():
        if len(g) < 2:
            continue
        for l in g:
            rl = rows[l]
            if not rl:
                continue
            for m in g:
                if m != l:
                    moved = list(rows)
                    moved[m] ^= rl
                    out.add(iso_canon_rows(n, tuple(moved))[0])
    return out


def orbit_forms(a: BottMatrix, budget=DEFAULT_ORBIT_BUDGET):
    """All iso-canonical forms in the Bott class of ``a``, in BFS order."""
    start = iso_canon_rows(a.n, a.rows)[0]
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbor_forms(a.n, cur):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                if len(seen) > budget:
                    raise OrbitBudgetExceeded(
                        f"Bott class of {a!r} has more than {budget} iso-classes")
                queue.append(nxt)
    return order


def bott_canon(a: BottMatrix, budget=DEFAULT_ORBIT_BUDGET) -> BottClassRep:
    """Smallest iso-canonical form in the Bott class of ``a``, and the class size.

    ``orbit_size`` counts isomorphism classes of digraphs in the Bott class.
    """
    if not isinstance(a, BottMatrix):
        a = BottMatrix(a)
    forms = orbit_forms(a, budget)
    best = min(forms, key=lambda r: encoding_key(a.n, r))
    return BottClassRep(BottMatrix._trusted(a.n, best), len(forms))


def bott_equivalent(a: BottMatrix, b: BottMatrix, budget=DEFAULT_ORBIT_BUDGET) -> bool:
    if a.n != b.n:
        raise SizeMismatch(f"sizes differ: {a.n} vs {b.n}")
    target = iso_canon_rows(b.n, b.rows)[0]
    # Membership in the orbit of a is cheaper than two full canonicalisations
    # when the classes are large; the answer is the same.
    return target in set(orbit_forms(a, budget))

