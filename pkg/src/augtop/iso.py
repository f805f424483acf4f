"""Isomorphism of small complexes by backtracking over vertex bijections."""

from __future__ import annotations

from .complex import Complex, link


def _signature(c: Complex, v: int) -> tuple:
    return link(c, (v,)).f_vector()


def find_isomorphism(a: Complex, b: Complex) -> dict[int, int] | None:
    """A vertex bijection carrying the faces of ``a`` onto those of ``b``."""
    if a.is_void or b.is_void:
        return {} if a.is_void and b.is_void else None
    if a.f_vector() != b.f_vector():
        return None
    va, vb = list(a.vertices), list(b.vertices)
    sig_a = {v: _signature(a, v) for v in va}
    sig_b = {v: _signature(b, v) for v in vb}
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None
    # most constrained vertices first
    va.sort(key=lambda v: (sum(1 for w in va if sig_a[w] == sig_a[v]), v))
    facets_a = [set(f) for f in a.facets]
    faces_b = b.faces
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int) -> bool:
        for f in facets_a:
            if v in f and all(x in mapping for x in f):
                if tuple(sorted(mapping[x] for x in f)) not in faces_b:
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(va):
            return True
        v = va[i]
        for w in vb:
            if w in used or sig_b[w] != sig_a[v]:
                continue
            mapping[v] = w
            used.add(w)
            if consistent(v) and search(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    # equal f-vectors plus every facet of a landing on a face of b gives equality
    return dict(mapping) if search(0) else None


def is_isomorphic(a: Complex, b: Complex) -> bool:
    return find_isomorphism(a, b) is not None
