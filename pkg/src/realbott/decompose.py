"""Splitting an acyclic digraph into indecomposable factors.

Local complementations and slides between non-roots never change the
connected components; only slides between roots (row additions among the
root rows) can.  So the finest split is read off the row space of the block
``B[roots, non-roots]``:

* reduce that block to reduced row echelon form using root slides (zero
  rows become isolated vertices);
* take the connected components of the digraph with the roots removed;
* join two components whenever one echelon row reaches both.

Reduced echelon form is unique and respects every direct-sum splitting of
the row space that is compatible with the components, so the groups found
this way are the finest possible ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import DEFAULT_ORBIT_BUDGET, BottClassRep, bott_canon, orbit_forms
from .core import BottMatrix, Permutation, columns_of, iter_bits, relabel, slide
from .errors import BottError, DomainError
from .gf2 import rank_rows, rref_rows, select_bits


class DecompositionError(BottError):
    """A computed block failed its indecomposability check."""


@dataclass(frozen=True)
class Decomposition:
    isolated_count: int
    factors: tuple[BottClassRep, ...]
    witness: BottMatrix
    blocks: tuple[tuple[int, ...], ...] = ()

    def factor_keys(self):
        return tuple(f.canonical.to_hex() for f in self.factors)

    def to_dict(self):
        return {"isolated": self.isolated_count, "factors": list(self.factor_keys())}


def roots(a: BottMatrix) -> frozenset[int]:
    return frozenset(j for j, c in enumerate(a.columns()) if c == 0)


def _components(n, rows, vertices):
    """Undirected components of the subgraph induced on ``vertices``."""
    allowed = 0
    for v in vertices:
        allowed |= 1 << v
    cols = columns_of(n, rows)
    adj = [(rows[v] | cols[v]) & allowed for v in range(n)]
    left = allowed
    comps = []
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        left &= ~comp
        comps.append(tuple(iter_bits(comp)))
    return comps


def connected_components(a: BottMatrix):
    return _components(a.n, a.rows, range(a.n))


def _split(a: BottMatrix):
    """Root slides that reduce the root block, and the resulting vertex blocks.

    Returns ``(slid, isolated, blocks)``.
    """
    root_list = sorted(roots(a))
    nonroots = [v for v in range(a.n) if v not in set(root_list)]
    block_rows = [select_bits(a.rows[r], nonroots) for r in root_list]
    reduced, _, ops = rref_rows(block_rows, len(nonroots))

    # Row i of the echelon matrix lives in root holder[i]; a swap only renames.
    holder = list(root_list)
    slid = a
    for op, x, y in ops:
        if op == "swap":
            holder[x], holder[y] = holder[y], holder[x]
        else:
            slid = slide(slid, holder[x], holder[y])

    isolated = [holder[i] for i, row in enumerate(reduced) if row == 0]
    active = [holder[i] for i, row in enumerate(reduced) if row != 0]

    comps = _components(a.n, a.rows, nonroots)
    comp_of = {v: k for k, comp in enumerate(comps) for v in comp}
    parent = list(range(len(comps)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    root_comp = {}
    for r in active:
        touched = sorted({comp_of[w] for w in iter_bits(slid.rows[r])})
        root_comp[r] = touched[0]
        for k in touched[1:]:
            parent[find(k)] = find(touched[0])

    grouped = {}
    for k, comp in enumerate(comps):
        grouped.setdefault(find(k), []).extend(comp)
    for r in active:
        grouped[find(root_comp[r])].append(r)
    blocks = sorted(tuple(sorted(vs)) for vs in grouped.values())
    return slid, sorted(isolated), blocks


def _check_block(sub: BottMatrix):
    """Connected, and the root block has full row rank."""
    if len(connected_components(sub)) != 1:
        raise DecompositionError(f"block {sub!r} is disconnected")
    rs = sorted(roots(sub))
    rest = [v for v in range(sub.n) if v not in set(rs)]
    if rank_rows(select_bits(sub.rows[r], rest) for r in rs) != len(rs):
        raise DecompositionError(f"block {sub!r} has dependent root rows")


def decompose(a: BottMatrix, budget=DEFAULT_ORBIT_BUDGET) -> Decomposition:
    """Isolated vertices plus the Bott classes of the multi-vertex factors.

    ``witness`` is a Bott-equivalent matrix that is block diagonal: the
    blocks in order, then the isolated vertices.
    """
    slid, isolated, blocks = _split(a)
    order = [v for b in blocks for v in b] + isolated
    perm = [0] * a.n
    for pos, v in enumerate(order):
        perm[v] = pos
    witness = relabel(slid, Permutation(perm))

    factors = []
    for b in blocks:
        sub = slid.induced(b)
        _check_block(sub)
        factors.append(bott_canon(sub, budget))
    factors.sort(key=lambda f: (f.canonical.n, f.canonical.key()))
    return Decomposition(len(isolated), tuple(factors), witness, tuple(blocks))


def is_indecomposable(a: BottMatrix) -> bool:
    if a.n == 1:
        return True
    _, isolated, blocks = _split(a)
    return not isolated and len(blocks) == 1


def max_components_oracle(a: BottMatrix, max_n: int = 5) -> int:
    """Largest number of connected components over the whole Bott class.

    Enumerates the class, so it is only meant for small ``n``.
    """
    if a.n > max_n:
        raise DomainError(f"oracle limited to n <= {max_n}, got {a.n}")
    return max(len(_components(a.n, f, range(a.n))) for f in orbit_forms(a))
