"""Mod-2 cohomology rings of real Bott manifolds.

For a strictly upper triangular ``A`` the ring is generated by degree-one
classes ``x_0 .. x_{n-1}`` subject to ``x_j^2 = x_j * alpha_j`` with
``alpha_j = sum_i A[i][j] x_i``.  Squarefree monomials form a basis, so an
element is a set of monomials, each monomial a bitmask of generators, and
addition is symmetric difference.  Text uses 1-based names (``x1+x3``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .canon import bott_equivalent, iso_canon
from .core import BottMatrix, iter_bits
from .errors import MalformedInput, PreconditionViolated, SizeMismatch


@dataclass(frozen=True)
class CohomElement:
    degree: int
    support: frozenset[int]

    def __add__(self, other):
        if self.degree != other.degree and self.support and other.support:
            raise ValueError("adding elements of different degree")
        deg = self.degree if self.support else other.degree
        return CohomElement(deg, self.support ^ other.support)

    def is_zero(self):
        return not self.support

    def linear_mask(self):
        """Degree-one element as a bitmask of generators."""
        if self.degree != 1 and self.support:
            raise ValueError("not a degree-one element")
        mask = 0
        for m in self.support:
            mask |= m
        return mask

    def __str__(self):
        return format_element(self)


def linear(mask: int) -> CohomElement:
    return CohomElement(1, frozenset(1 << i for i in iter_bits(mask)))


def format_element(e: CohomElement) -> str:
    if not e.support:
        return "0"
    terms = sorted(e.support, key=lambda m: [i for i in iter_bits(m)])
    return "+".join("".join(f"x{i + 1}" for i in iter_bits(m)) or "1" for m in terms)


_TERM = re.compile(r"^(x\d+)+$")


def parse_element(text: str, n: int) -> CohomElement:
    """Parse ``"x1+x3"`` or ``"x1x2+x3x4"``; ``"0"`` is the zero element of degree 1."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return CohomElement(1, frozenset())
    support = frozenset()
    degree = None
    for term in text.split("+"):
        if not _TERM.match(term):
            raise MalformedInput(f"bad term {term!r}")
        idx = [int(t) - 1 for t in re.findall(r"\d+", term)]
        if any(not 0 <= i < n for i in idx):
            raise MalformedInput(f"generator out of range in {term!r}")
        if len(set(idx)) != len(idx):
            raise MalformedInput(f"term {term!r} is not squarefree")
        if degree is None:
            degree = len(idx)
        elif degree != len(idx):
            raise MalformedInput("mixed degrees")
        support ^= {sum(1 << i for i in idx)}
    return CohomElement(degree, support)


class CohomRing:
    """The ring for a strictly upper triangular Bott matrix.

    Use :meth:`for_matrix` to relabel a general Bott matrix first.
    """

    def __init__(self, a: BottMatrix):
        if not a.is_strictly_upper():
            raise PreconditionViolated("cohomology ring needs a strictly upper triangular matrix")
        self.A = a
        self.n = a.n
        self.alpha = a.columns()  # alpha[j] as a mask of generators
        self._gen = lru_cache(maxsize=None)(self._times_generator)
        self._mono = lru_cache(maxsize=None)(self._times_monomial)

    @classmethod
    def for_matrix(cls, a: BottMatrix) -> "CohomRing":
        return cls(a if a.is_strictly_upper() else iso_canon(a).matrix)

    def generator(self, j) -> CohomElement:
        return CohomElement(1, frozenset({1 << j}))

    def alpha_element(self, j) -> CohomElement:
        return linear(self.alpha[j])

    def _times_generator(self, mono, j):
        if not (mono >> j) & 1:
            return frozenset({mono | (1 << j)})
        # mono already holds x_j, so mono * x_j = mono * alpha_j; alpha_j only
        # involves generators below j, which bounds the recursion.
        out = frozenset()
        for i in iter_bits(self.alpha[j]):
            out ^= self._gen(mono, i)
        return out

    def _times_monomial(self, m1, m2):
        acc = frozenset({m1})
        for j in iter_bits(m2):
            nxt = frozenset()
            for m in acc:
                nxt ^= self._gen(m, j)
            acc = nxt
        return acc

    def multiply(self, u: CohomElement, v: CohomElement) -> CohomElement:
        out = frozenset()
        for a in u.support:
            for b in v.support:
                out ^= self._mono(a, b)
        return CohomElement(u.degree + v.degree, out)

    def square(self, u):
        return self.multiply(u, u)

    def degree_basis(self, q):
        return [m for m in range(1 << self.n) if m.bit_count() == q]


@dataclass(frozen=True)
class EigenData:
    alpha: CohomElement
    eigenspace_basis: tuple[CohomElement, ...]
    reduced_dim: int

    @property
    def dim(self):
        return len(self.eigenspace_basis)


def _reduced_basis(masks):
    """Reduced echelon basis of the span of ``masks`` (canonical for the span)."""
    basis = []
    for v in masks:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
    return sorted(basis)


def eigen_elements(ring: CohomRing) -> list[EigenData]:
    """The eigen-elements ``alpha_j`` and the bases of their eigen-spaces.

    The eigen-space of ``alpha`` is spanned by ``alpha`` together with every
    generator ``x_i`` whose own ``alpha_i`` equals ``alpha``.
    """
    out = []
    for a in sorted(set(ring.alpha)):
        gens = [1 << i for i, ai in enumerate(ring.alpha) if ai == a]
        basis = _reduced_basis(([a] if a else []) + gens)
        out.append(EigenData(linear(a), tuple(linear(b) for b in basis),
                             len(basis) - (1 if a else 0)))
    return out


def predicted_eigenspace(ring: CohomRing, alpha_mask: int):
    """Basis of the eigen-space of any degree-one ``alpha`` from the structure alone."""
    gens = [1 << i for i, ai in enumerate(ring.alpha) if ai == alpha_mask]
    return _reduced_basis([alpha_mask] + gens)


def eigen_space_bruteforce(ring: CohomRing, alpha) -> list[int]:
    """Solve ``x^2 = alpha * x`` by trying all ``2**n`` degree-one ``x``.

    Returns a reduced basis of the solution space as generator bitmasks.
    """
    if ring.n > 20:
        raise SizeMismatch("brute force limited to n <= 20")
    a = alpha if isinstance(alpha, CohomElement) else linear(alpha)
    sols = []
    for x in range(1 << ring.n):
        xe = linear(x)
        if ring.square(xe) == ring.multiply(a, xe):
            sols.append(x)
    return _reduced_basis(sols)


def rings_isomorphic(a: BottMatrix, b: BottMatrix) -> bool:
    """Graded ring isomorphism of the mod-2 cohomology, decided via Bott equivalence."""
    if a.n != b.n:
        raise SizeMismatch(f"sizes differ: {a.n} vs {b.n}")
    return bott_equivalent(a, b)


def _independent_tuples(n):
    """All ordered bases of ``(Z/2)^n`` as tuples of bitmasks."""
    def extend(prefix, span):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, 1 << n):
            if v not in span:
                yield from extend(prefix + [v], span | {s ^ v for s in span})
    yield from extend([], {0})


def graded_iso_bruteforce(a: BottMatrix, b: BottMatrix) -> bool:
    """Search every invertible degree-one substitution for a ring isomorphism.

    A substitution ``x_j -> phi_j`` that sends each relation
    ``x_j^2 + x_j alpha_j`` to zero defines a surjective graded map between
    rings of equal dimension, hence an isomorphism.
    """
    if a.n != b.n:
        raise SizeMismatch(f"sizes differ: {a.n} vs {b.n}")
    ra, rb = CohomRing.for_matrix(a), CohomRing.for_matrix(b)
    n = a.n
    for images in _independent_tuples(n):
        ok = True
        for j in range(n):
            phi_x = linear(images[j])
            phi_alpha = 0
            for i in iter_bits(ra.alpha[j]):
                phi_alpha ^= images[i]
            if rb.square(phi_x) != rb.multiply(phi_x, linear(phi_alpha)):
                ok = False
                break
        if ok:
            return True
    return False

