"""Exhaustive classification of Bott matrices of a given size.

``classify_all`` works in two passes over the isomorphism classes:

1. every strictly upper triangular pattern is mapped to its iso-canonical
   form and the forms are counted;
2. each distinct form is joined in a union-find to the forms one local
   complementation or slide away.

Both passes are plain map-reduce over contiguous chunks, so they run in a
process pool with a result that does not depend on the worker count.
``classify_stream`` handles arbitrary inputs (for example a digraph6 list)
by running the orbit search of :func:`~realbott.canon.orbit_forms` once per
new class and memoising every form it visits.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing as mp
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canon import DEFAULT_ORBIT_BUDGET, iso_canon_rows, neighbor_forms, orbit_forms
from .core import BottMatrix, encoding_key
from .errors import DomainError, EmptyInput, MalformedInput, SizeMismatch
from .invariants import orientable, symplectic

MAX_CLASSIFY_N = 8
LONG_RUN_N = 7


@dataclass(frozen=True)
class ClassRecord:
    canonical: BottMatrix
    member_count: int
    orientable: bool
    symplectic: bool

    def to_dict(self):
        return {
            "canon": self.canonical.to_hex(),
            "members": self.member_count,
            "orientable": self.orientable,
            "symplectic": self.symplectic,
        }


@dataclass(frozen=True)
class ClassificationSummary:
    n: int
    records: tuple[ClassRecord, ...] = field(repr=False)

    @property
    def D(self):
        return len(self.records)

    @property
    def O(self):  # noqa: E743
        return sum(r.orientable for r in self.records)

    @property
    def S(self):
        return sum(r.symplectic for r in self.records)

    def to_dict(self):
        return {"n": self.n, "D": self.D, "O": self.O, "S": self.S,
                "classes": [r.to_dict() for r in self.records]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "canon", "members", "orientable", "symplectic"])
        for r in self.records:
            w.writerow([self.n, r.canonical.to_hex(), r.member_count,
                        int(r.orientable), int(r.symplectic)])
        return buf.getvalue()


def _build_summary(n, counts):
    """``counts`` maps class-canonical rows to member counts."""
    records = []
    for rows in sorted(counts, key=lambda r: encoding_key(n, r)):
        m = BottMatrix._trusted(n, rows)
        records.append(ClassRecord(m, counts[rows], orientable(m), symplectic(m)))
    return ClassificationSummary(n, tuple(records))


# ---------------------------------------------------------------------------
# Union-find over iso-canonical forms
# ---------------------------------------------------------------------------


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


# ---------------------------------------------------------------------------
# Worker tasks (module level so they pickle)
# ---------------------------------------------------------------------------


def _count_iso_forms(args):
    n, lo, hi = args
    counts = Counter()
    for pattern in range(lo, hi):
        rows = BottMatrix.from_upper_bits(n, pattern).rows
        counts[iso_canon_rows(n, rows)[0]] += 1
    return counts


def _expand_forms(args):
    n, forms = args
    return [(f, neighbor_forms(n, f)) for f in forms]


def _chunks(total, parts):
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    lo = 0
    for k in range(parts):
        hi = lo + step + (1 if k < extra else 0)
        yield lo, hi
        lo = hi


def _run_map(func, tasks, worker_count):
    if worker_count <= 1:
        return [func(t) for t in tasks]
    ctx = mp.get_context("fork")
    with ProcessPoolExecutor(max_workers=worker_count, mp_context=ctx) as pool:
        return list(pool.map(func, tasks))


def classify_all(n: int, worker_count: int = 1, *, long_run: bool = False,
                 chunks_per_worker: int = 4) -> ClassificationSummary:
    """Classify all ``2**(n(n-1)/2)`` strictly upper triangular matrices of size ``n``.

    Sizes 7 and 8 take minutes to hours and need ``long_run=True``.
    """
    if not 1 <= n <= MAX_CLASSIFY_N:
        raise DomainError(f"classify_all supports 1 <= n <= {MAX_CLASSIFY_N}, got {n}")
    if n >= LONG_RUN_N and not long_run:
        raise DomainError(f"n={n} needs long_run=True")
    total = 1 << (n * (n - 1) // 2)
    nparts = max(1, worker_count) * chunks_per_worker
    iso_counts = Counter()
    for part in _run_map(_count_iso_forms,
                         [(n, lo, hi) for lo, hi in _chunks(total, nparts)], worker_count):
        iso_counts.update(part)

    forms = sorted(iso_counts, key=lambda r: encoding_key(n, r))
    tasks = [(n, forms[lo:hi]) for lo, hi in _chunks(len(forms), nparts)]
    uf = UnionFind(forms)
    for part in _run_map(_expand_forms, tasks, worker_count):
        for f, nbrs in part:
            for g in nbrs:
                uf.union(f, g)

    counts = {}
    for group in uf.groups():
        rep = min(group, key=lambda r: encoding_key(n, r))
        counts[rep] = sum(iso_counts[f] for f in group)
    return _build_summary(n, counts)


def classify_stream(source, budget=DEFAULT_ORBIT_BUDGET) -> ClassificationSummary:
    """Classify the matrices yielded by ``source``; counts stream elements per class."""
    cache = {}  # iso form -> class canonical rows
    counts = Counter()
    n = None
    for item in source:
        if not isinstance(item, BottMatrix):
            raise MalformedInput(f"stream element {item!r} is not a BottMatrix")
        if n is None:
            n = item.n
        elif item.n != n:
            raise SizeMismatch(f"stream mixes n={n} and n={item.n}")
        form = iso_canon_rows(n, item.rows)[0]
        rep = cache.get(form)
        if rep is None:
            orbit = orbit_forms(item, budget)
            rep = min(orbit, key=lambda r: encoding_key(n, r))
            for f in orbit:
                cache[f] = rep
        counts[rep] += 1
    if n is None:
        raise EmptyInput("empty stream")
    return _build_summary(n, counts)


def nonisomorphic_dags(n: int):
    """One strictly upper triangular representative per isomorphism class."""
    seen = set()
    for pattern in range(1 << (n * (n - 1) // 2)):
        form = iso_canon_rows(n, BottMatrix.from_upper_bits(n, pattern).rows)[0]
        if form not in seen:
            seen.add(form)
    return [BottMatrix._trusted(n, f) for f in sorted(seen, key=lambda r: encoding_key(n, r))]


def delta_family(n: int):
    """Strictly upper triangular matrices whose superdiagonal is all ones."""
    if n < 2:
        raise DomainError("delta_family needs n >= 2")
    free = [(i, j) for i in range(n) for j in range(i + 2, n)]
    base = [1 << (i + 1) if i + 1 < n else 0 for i in range(n)]
    out = []
    for mask in range(1 << len(free)):
        rows = list(base)
        for k, (i, j) in enumerate(free):
            if (mask >> k) & 1:
                rows[i] |= 1 << j
        out.append(BottMatrix._trusted(n, tuple(rows)))
    return out
