"""Face-ring combinatorics and homological ring-property tests.

The face ring itself is never built.  Ideals are kept as their minimal
non-face generators and all ring properties are decided through link
homology.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .complex import (
    Complex, Simplex, codim1_skeleton, core, costar, delete_vertices, is_pure,
    link, simplex,
)
from .homology import ZZ, CoefficientRing, homology, homology_pair


def _universe(c: Complex, universe: Iterable[int] | None) -> Simplex:
    verts = set(c.vertices)
    if universe is None:
        return tuple(sorted(verts))
    w = simplex(universe)
    if not verts <= set(w):
        raise ValueError("universe does not contain every vertex of the complex")
    return w


def non_simplices(c: Complex, universe: Iterable[int] | None = None) -> list[Simplex]:
    """Minimal non-faces with respect to ``universe`` (default: the vertex set)."""
    w = _universe(c, universe)
    if c.is_void:
        return [()]
    faces = c.faces
    out = [(v,) for v in w if (v,) not in faces]
    # a minimal non-face of size >= 2 has all its vertices in the complex
    verts = c.vertices
    for k in range(2, len(verts) + 1):
        for s in combinations(verts, k):
            if s not in faces and all(s[:i] + s[i + 1:] in faces for i in range(k)):
                out.append(s)
    return sorted(out, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Simplex, ...]
    universe: Simplex

    def contains(self, support: Iterable[int]) -> bool:
        s = set(support)
        return any(s.issuperset(g) for g in self.generators)


def stanley_reisner_ideal(c: Complex, universe: Iterable[int] | None = None) -> MonomialIdeal:
    return MonomialIdeal(tuple(non_simplices(c, universe)), _universe(c, universe))


def ideal_membership(support: Iterable[int], c: Complex) -> bool:
    """A squarefree monomial lies in the face ideal iff its support is a non-face."""
    return simplex(support) not in c


@dataclass(frozen=True)
class HilbertFunction:
    coefficients: tuple[int, ...]
    krull_dim: int
    # numerator coefficients of sum_i f_{i-1} t^i / (1-t)^i, keyed by i
    numerator: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        return self.coefficients[m]

    def series_value(self, t: Fraction) -> Fraction:
        """Closed form evaluated at a rational point with |t| < 1."""
        return sum((Fraction(f) * t ** i / (1 - t) ** i for i, f in enumerate(self.numerator)), Fraction(0))


def hilbert_function(c: Complex, n: int) -> HilbertFunction:
    if n < 0:
        raise ValueError("truncation must be non-negative")
    if c.is_void:
        return HilbertFunction((0,) * (n + 1), -1, ())
    f = c.f_vector()  # f[i] counts faces with i vertices
    coeffs = [1]
    for m in range(1, n + 1):
        coeffs.append(sum(f[i] * comb(m - 1, i - 1) for i in range(1, len(f))))
    return HilbertFunction(tuple(coeffs), int(c.dim) + 1, tuple(f))


def _vanishes_below_top(c: Complex, s: Simplex, ring: CoefficientRing) -> bool:
    lk = link(c, s)
    h = homology(lk, ring)
    return all(d >= lk.dim for d in h.degrees)


def _require(c: Complex) -> None:
    if c.is_void:
        raise ValueError("ring properties need a non-void complex")


def is_cohen_macaulay(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    _require(c)
    return all(_vanishes_below_top(c, s, ring) for s in c.faces)


def is_buchsbaum(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    _require(c)
    return is_pure(c) and all(_vanishes_below_top(c, s, ring) for s in c.faces if s)


def is_gorenstein(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    """Links in the core have the homology of spheres of their dimension."""
    _require(c)
    g = core(c)
    if g.dim == -1 or (g.dim == 0 and len(g.vertices) <= 2):
        # {()}, a point, or two points
        return True
    for s in g.faces:
        lk = link(g, s)
        h = homology(lk, ring)
        top = int(lk.dim)
        if any(d != top for d in h.degrees) or not h[top].is_cyclic_free():
            return False
    return True


def is_k_cm(c: Complex, k: int, ring: CoefficientRing = ZZ, rule: str = "equal") -> bool:
    """Deleting any ``k - 1`` vertices leaves a CM complex of the same dimension.

    ``rule="less"`` ranges over all vertex sets with fewer than ``k`` elements.
    """
    _require(c)
    if k < 1:
        raise ValueError("k must be at least 1")
    verts = c.vertices
    if k - 1 >= len(verts) and k > 1:
        raise ValueError("k - 1 must be smaller than the number of vertices")
    sizes = [k - 1] if rule == "equal" else range(k)
    for size in sizes:
        for t in combinations(verts, size):
            rest = delete_vertices(c, t)
            if rest.is_void or rest.dim != c.dim or not is_cohen_macaulay(rest, ring):
                return False
    return True


def is_two_cm(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    """CM, and every costar has vanishing homology in degree dim - 1."""
    _require(c)
    if not is_cohen_macaulay(c, ring):
        return False
    n = int(c.dim)
    return all(homology(costar(c, s), ring)[n - 1].is_zero for s in c.faces)


def skeleton_law(c: Complex, ring: CoefficientRing = ZZ) -> tuple[bool, bool]:
    """Both sides of: CM iff the codimension-one skeleton is 2-CM and every
    relative homology H_{n-1}(c, cost d) vanishes."""
    _require(c)
    lhs = is_cohen_macaulay(c, ring)
    sk = codim1_skeleton(c)
    n = int(c.dim)
    sk_ok = sk.is_void or is_two_cm(sk, ring)
    rel_ok = all(homology_pair(c, costar(c, s), ring)[n - 1].is_zero for s in c.faces)
    return lhs, sk_ok and rel_ok
