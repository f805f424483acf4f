"""Manifold boundaries, classification and orientability."""

from __future__ import annotations

from dataclasses import dataclass, field
import warnings

from .complex import (
    MAX_VERTICES, Complex, Simplex, closure, codim1_skeleton, costar, from_facets, is_pure,
    is_strongly_connected, join, join_offset, link, product_ordered,
    strong_components, subsets, union,
)
from .homology import ZZ, CoefficientRing, Group, homology, homology_pair


class NotAManifoldError(ValueError):
    pass


class BoundaryClosureWarning(UserWarning):
    """The raw boundary set was not closed downward and had to be completed."""


@dataclass(frozen=True)
class BoundaryResult:
    complex: Complex
    raw: frozenset[Simplex]
    closed: bool


def _is_ring_cyclic(g: Group) -> bool:
    return g.is_cyclic_free()


def boundary_detail(c: Complex, ring: CoefficientRing = ZZ) -> BoundaryResult:
    """Faces whose top-degree local homology vanishes."""
    if c.is_void:
        raise ValueError("the boundary of the void complex is not defined here")
    n = int(c.dim)
    raw = frozenset(s for s in c.faces
                    if homology_pair(c, costar(c, s), ring)[n].is_zero)
    if not raw:
        return BoundaryResult(Complex.void(), raw, True)
    closed = all(sub in raw for s in raw for sub in subsets(s))
    return BoundaryResult(Complex.from_faces(raw, c.labels), raw, closed)


def boundary(c: Complex, ring: CoefficientRing = ZZ) -> Complex:
    res = boundary_detail(c, ring)
    if not res.closed:
        warnings.warn("boundary faces were not closed downward; returning their closure",
                      BoundaryClosureWarning, stacklevel=2)
    return res.complex


def boundary_via_links(c: Complex, ring: CoefficientRing = ZZ) -> Complex:
    """Same set computed through link homology shifted by the face size."""
    if c.is_void:
        raise ValueError("the boundary of the void complex is not defined here")
    n = int(c.dim)
    raw = [s for s in c.faces if homology(link(c, s), ring)[n - len(s)].is_zero]
    return Complex.from_faces(raw) if raw else Complex.void()


def _small_manifold(c: Complex) -> bool:
    # dimension <= 0: only void, {()}, a point and two points
    return c.is_void or (c.dim <= 0 and len(c.vertices) <= 2)


def _ridge_condition(c: Complex) -> bool:
    """Every codimension-one face lies in at most two facets."""
    n = int(c.dim)
    counts: dict[Simplex, int] = {}
    for f in c.facets:
        if len(f) != n + 1:
            continue
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            counts[r] = counts.get(r, 0) + 1
    return all(v <= 2 for v in counts.values())


def is_pseudomanifold(c: Complex) -> bool:
    if c.is_void or c.dim <= 0:
        return _small_manifold(c)
    return is_pure(c) and _ridge_condition(c) and is_strongly_connected(c)


def is_quasi_manifold(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    """Pure, thin ridges, and every link of dimension >= 1 connected.

    Strong connectivity is not demanded directly; it follows from the link
    conditions.
    """
    if c.is_void or c.dim <= 0:
        return _small_manifold(c)
    if not (is_pure(c) and _ridge_condition(c)):
        return False
    n = int(c.dim)
    for s in c.faces:
        if n - len(s) >= 1 and not homology(link(c, s), ring)[0].is_zero:
            return False
    return True


def _links_ok(c: Complex, ring: CoefficientRing, sphere: bool) -> bool:
    n = int(c.dim)
    for s in c.faces:
        if not s and not sphere:
            continue
        h = homology(link(c, s), ring)
        top = n - len(s)
        if any(d != top for d in h.degrees):
            return False
        g = h[top]
        if sphere and not _is_ring_cyclic(g):
            return False
        if not sphere and not (g.is_zero or _is_ring_cyclic(g)):
            return False
    return True


def is_homology_manifold(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    if c.is_void:
        return True
    if c.dim <= 0:
        return _small_manifold(c)
    if not homology(c, ring)[0].is_zero:
        return False
    return _links_ok(c, ring, sphere=False)


def is_homology_sphere(c: Complex, ring: CoefficientRing = ZZ) -> bool:
    if c.is_void:
        return False
    if c.dim <= 0:
        return c.dim == -1 or len(c.vertices) == 2
    return is_homology_manifold(c, ring) and _links_ok(c, ring, sphere=True)


def orientable(c: Complex, ring: CoefficientRing = ZZ, check: bool = True) -> bool | None:
    """Top relative homology modulo the boundary is one copy of the ring.

    Returns ``None`` for the void complex.
    """
    if c.is_void:
        return None
    if check and not is_pseudomanifold(c):
        raise NotAManifoldError("orientability needs a manifold")
    bd = boundary_detail(c, ring).complex
    return _is_ring_cyclic(homology_pair(c, bd, ring)[int(c.dim)])


def boundary_components(c: Complex, ring: CoefficientRing = ZZ) -> list[Complex]:
    if c.is_void:
        return []
    bd = boundary_detail(c, ring).complex
    if bd.is_void:
        return []
    return [from_facets(group) for group in strong_components(bd.facets)]


def pseudo_boundary(c: Complex) -> Complex:
    """Closure of the codimension-one faces lying in exactly one facet."""
    if c.is_void or c.dim < 0:
        return Complex.void()
    n = int(c.dim)
    counts: dict[Simplex, int] = {}
    for f in c.facets:
        if len(f) == n + 1:
            for i in range(len(f)):
                r = f[:i] + f[i + 1:]
                counts[r] = counts.get(r, 0) + 1
    free = [r for r, k in counts.items() if k == 1]
    return Complex.from_faces(free) if free else Complex.void()


@dataclass
class ManifoldReport:
    ring: CoefficientRing
    is_pseudo: bool
    is_quasi: bool
    is_homology_manifold: bool
    is_homology_sphere: bool
    boundary: Complex
    orientable: bool | None
    components: list[Complex] = field(default_factory=list)
    boundary_closed: bool = True


def classify(c: Complex, ring: CoefficientRing = ZZ) -> ManifoldReport:
    if len(c.vertices) > MAX_VERTICES:
        raise ValueError(f"complex has more than {MAX_VERTICES} vertices")
    pseudo = is_pseudomanifold(c)
    quasi = is_quasi_manifold(c, ring)
    hm = is_homology_manifold(c, ring)
    hsp = is_homology_sphere(c, ring)
    if c.is_void:
        return ManifoldReport(ring, pseudo, quasi, hm, hsp, Complex.void(), None, [], True)
    res = boundary_detail(c, ring)
    comps = [from_facets(g) for g in strong_components(res.complex.facets)] if not res.complex.is_void else []
    orient = orientable(c, ring, check=False)
    return ManifoldReport(ring, pseudo, quasi, hm, hsp, res.complex, orient, comps, res.closed)


@dataclass
class BoundaryFormulaReport:
    holds: bool
    construction: str
    lhs: Complex
    rhs: Complex
    witness: Simplex | None = None
    hypotheses_ok: bool = True
    message: str = ""


def _first_difference(a: Complex, b: Complex) -> Simplex | None:
    diff = sorted(a.faces ^ b.faces, key=lambda s: (len(s), s))
    return diff[0] if diff else None


def verify_boundary_formula(a: Complex, b: Complex, ring: CoefficientRing = ZZ,
                            construction: str = "join") -> BoundaryFormulaReport:
    """Compare the boundary of a join or product with the predicted union.

    The factors must be quasi-manifolds; otherwise the report records the
    violated hypothesis and ``holds`` is False.
    """
    bad = [name for name, x in (("first", a), ("second", b))
           if x.is_void or not is_quasi_manifold(x, ring)]
    if construction == "join":
        off = join_offset(a, b)
        whole = join(a, b, off)
        lhs = boundary(whole, ring) if not whole.is_void else Complex.void()
        bd_a, bd_b = boundary(a, ring), boundary(b, ring)
        rhs = union(join(bd_a, b, off) if not bd_a.is_void else Complex.void(),
                    join(a, bd_b, off) if not bd_b.is_void else Complex.void())
    elif construction == "product":
        w = max(_width(b), 1)
        whole = product_ordered(a, b, w)
        lhs = boundary(whole, ring)
        if len(a.vertices) == 1 and a.dim == 0:
            rhs = product_ordered(a, boundary(b, ring), w)
        elif len(b.vertices) == 1 and b.dim == 0:
            rhs = product_ordered(boundary(a, ring), b, w)
        else:
            rhs = union(product_ordered(boundary(a, ring), b, w), product_ordered(a, boundary(b, ring), w))
    else:
        raise ValueError(f"unknown construction {construction!r}")
    if bad:
        return BoundaryFormulaReport(False, construction, lhs, rhs, None, False,
                                     f"{' and '.join(bad)} factor is not a quasi-manifold")
    w = _first_difference(lhs, rhs)
    if lhs.is_void != rhs.is_void and w is None:
        w = ()
    return BoundaryFormulaReport(w is None, construction, lhs, rhs, w)


def _width(b: Complex) -> int:
    v = b.vertices
    return v[-1] + 1 if v else 1


def boundary_link_commutes(c: Complex, s: Simplex, ring: CoefficientRing = ZZ) -> bool:
    """Boundary of the link equals the link in the boundary (void off the boundary)."""
    bd = boundary(c, ring)
    lk = link(c, s)
    lhs = boundary(lk, ring) if not lk.is_void else Complex.void()
    rhs = link(bd, s) if not bd.is_void else Complex.void()
    return lhs == rhs


def torsion_dichotomy(c: Complex) -> bool:
    """Integral top homology modulo the free boundary is Z with torsion-free
    codimension one, or zero with Z2 torsion there."""
    n = int(c.dim)
    h = homology_pair(c, pseudo_boundary(c), ZZ)
    top, below = h[n], h[n - 1]
    return (top.is_cyclic_free() and not below.torsion) != (top.is_zero and below.torsion == (2,))
