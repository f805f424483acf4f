"""Named example complexes.

Names may be combined with ``*`` to form joins, e.g. ``"moebius5*point"``.
"""

from __future__ import annotations

from .complex import Complex, from_facets, join, product_ordered

_FACETS: dict[str, list[list[int]]] = {
    "point": [[1]],
    "s0": [[1], [2]],
    "ball1": [[1, 2]],
    "s1_3": [[1, 2], [1, 3], [2, 3]],
    "s1_4": [[1, 3], [1, 4], [2, 3], [2, 4]],
    # two vertices joined by three arcs, one arc subdivided
    "theta": [[1, 2], [1, 3], [3, 2], [1, 4], [4, 2]],
    "moebius5": [[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]],
    "cylinder": [[1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [1, 3, 6], [1, 4, 6]],
    "rp2_6": [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
              [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]],
    "s2_4": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
    "ball2": [[1, 2, 3]],
}


ALIASES = {"rp2": "rp2_6", "moebius": "moebius5", "s1": "s1_4", "bullet": "point"}


def _base(name: str) -> Complex:
    name = ALIASES.get(name, name)
    if name == "void":
        return Complex.void()
    if name == "empty":
        return Complex.empty()
    if name == "square_product":
        ball = from_facets([[1, 2]])
        return product_ordered(ball, from_facets([[3, 4]]))
    if name in _FACETS:
        return from_facets(_FACETS[name])
    raise KeyError(f"unknown corpus complex {name!r}")


def corpus(name: str) -> Complex:
    parts = [p.strip() for p in name.split("*")]
    result = _base(parts[0])
    for p in parts[1:]:
        result = join(result, _base(p))
    return result


BASE_NAMES = ("void", "empty", "point", "s0", "ball1", "s1_3", "s1_4", "theta",
              "square_product", "moebius5", "cylinder", "rp2_6", "s2_4", "ball2")

JOIN_NAMES = ("s0*s0", "ball1*ball1", "s1_3*point", "s1_3*point*point",
              "moebius5*point", "rp2_6*point", "s0*point")


def names() -> list[str]:
    return list(BASE_NAMES) + list(JOIN_NAMES)


def all_complexes() -> dict[str, Complex]:
    return {n: corpus(n) for n in names()}
