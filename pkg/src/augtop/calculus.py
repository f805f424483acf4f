"""Checks of the link/costar/join identities on concrete complexes.

Each check returns a list of human-readable failures (empty when all hold).
"""

from __future__ import annotations

from .complex import (
    Complex, Simplex, closure, codim1_skeleton, costar, intersection, is_pure,
    join, join_offset, link, simplex, simplex_boundary, star_closed, union,
)


def check_link_of_join(a: Complex, b: Complex) -> list[str]:
    off = join_offset(a, b)
    whole = join(a, b, off)
    bad = []
    for s1 in a.faces:
        la = link(a, s1)
        for s2 in b.faces:
            s = simplex(s1 + tuple(v + off for v in s2))
            if link(whole, s) != join(la, link(b, s2), off):
                bad.append(f"link of join at {s1}+{s2}")
    return bad


def check_link_of_link(c: Complex) -> list[str]:
    bad = []
    for s in c.faces:
        lk = link(c, s)
        for t in lk.faces:
            if link(lk, t) != link(c, simplex(s + t)):
                bad.append(f"iterated link at {s},{t}")
    return bad


def check_costar_union(c: Complex) -> list[str]:
    bad = []
    faces = sorted(c.faces)
    for i, d1 in enumerate(faces):
        for d2 in faces[i:]:
            if costar(c, simplex(d1 + d2)) != union(costar(c, d1), costar(c, d2)):
                bad.append(f"costar of union at {d1},{d2}")
    return bad


def check_link_lattice(a: Complex, b: Complex) -> list[str]:
    bad = []
    u, m = union(a, b), intersection(a, b)
    for s in u.faces:
        if link(u, s) != union(link(a, s), link(b, s)):
            bad.append(f"link over union at {s}")
        if link(m, s) != intersection(link(a, s), link(b, s)):
            bad.append(f"link over intersection at {s}")
    return bad


def check_star_costar(c: Complex) -> list[str]:
    bad = []
    for s in c.faces:
        lhs = intersection(star_closed(c, s), costar(c, s))
        rhs = _join_disjoint(simplex_boundary(s), link(c, s))
        if lhs != rhs:
            bad.append(f"closed star meets costar at {s}")
        if star_closed(c, s) != _join_disjoint(closure(s), link(c, s)):
            bad.append(f"closed star as join at {s}")
    return bad


def _join_disjoint(a: Complex, b: Complex) -> Complex:
    # faces of a and b already live on disjoint vertices
    return join(a, b, 0) if not (a.is_void or b.is_void) else Complex.void()


def check_purity_criterion(c: Complex) -> list[str]:
    sk = codim1_skeleton(c)
    agree = all(
        codim1_skeleton(link(c, s)) == (link(sk, s) if not sk.is_void else Complex.void())
        for s in c.faces if s
    )
    if agree != is_pure(c):
        return [f"purity criterion disagrees (pure={is_pure(c)})"]
    return []


def check_all(c: Complex, other: Complex) -> list[str]:
    """Every identity on ``c``; ``other`` supplies the second factor or lattice partner."""
    return (check_link_of_join(c, other) + check_link_of_link(c) + check_costar_union(c)
            + check_link_lattice(c, other) + check_star_costar(c) + check_purity_criterion(c))
