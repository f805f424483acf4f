"""Seeded random complexes for property checks."""

from __future__ import annotations

import random

from .complex import Complex, closure, from_facets, join, simplex_boundary


def random_complex(rng: random.Random, max_vertices: int = 8, max_facets: int = 6,
                   max_size: int = 4, allow_trivial: bool = True) -> Complex:
    """Closure of a few random vertex sets; occasionally ``{()}``."""
    if allow_trivial and rng.random() < 0.03:
        return Complex.empty()
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, min(max_size, n))
        facets.append(rng.sample(range(1, n + 1), size))
    return from_facets(facets)


def random_pure_complex(rng: random.Random, max_vertices: int = 7, max_facets: int = 7,
                        max_dim: int = 2) -> Complex:
    n = rng.randint(2, max_vertices)
    d = rng.randint(0, min(max_dim, n - 1))
    facets = [rng.sample(range(1, n + 1), d + 1) for _ in range(rng.randint(1, max_facets))]
    return from_facets(facets)


def random_subcomplex(rng: random.Random, c: Complex) -> Complex:
    """Void, ``{()}``, or the closure of a random subset of facets."""
    r = rng.random()
    if r < 0.2:
        return Complex.void()
    if r < 0.35:
        return Complex.empty()
    chosen = [f for f in c.facets if rng.random() < 0.5]
    if not chosen:
        return Complex.empty()
    # shrink some facets so proper subcomplexes show up
    out = []
    for f in chosen:
        if len(f) > 1 and rng.random() < 0.5:
            f = tuple(rng.sample(f, len(f) - 1))
        out.append(f)
    return from_facets(out)


def stacked_ball(rng: random.Random, dim: int, steps: int) -> Complex:
    """Glue simplices one at a time onto free boundary facets."""
    facets = [tuple(range(1, dim + 2))]
    next_v = dim + 2
    for _ in range(steps):
        counts: dict[tuple[int, ...], int] = {}
        for f in facets:
            for i in range(len(f)):
                r = f[:i] + f[i + 1:]
                counts[r] = counts.get(r, 0) + 1
        free = sorted(r for r, k in counts.items() if k == 1)
        ridge = rng.choice(free)
        facets.append(ridge + (next_v,))
        next_v += 1
    return from_facets(facets)


def stacked_sphere(rng: random.Random, dim: int, steps: int) -> Complex:
    """Boundary of a stacked ball of one dimension higher."""
    ball = stacked_ball(rng, dim + 1, steps)
    counts: dict[tuple[int, ...], int] = {}
    for f in ball.facets:
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            counts[r] = counts.get(r, 0) + 1
    return from_facets([r for r, k in counts.items() if k == 1])


def cycle(n: int) -> Complex:
    return from_facets([[i, i % n + 1] for i in range(1, n + 1)])


def path(n: int) -> Complex:
    return from_facets([[i, i + 1] for i in range(1, n)]) if n > 1 else closure([1])


def random_manifold(rng: random.Random) -> Complex:
    """A small combinatorial manifold (ball, sphere, cycle, path, point pair...)."""
    kind = rng.choice(["ball", "sphere", "cycle", "path", "point", "s0", "empty", "simplex_boundary"])
    if kind == "ball":
        return stacked_ball(rng, rng.randint(1, 2), rng.randint(0, 3))
    if kind == "sphere":
        return stacked_sphere(rng, rng.randint(1, 2), rng.randint(0, 2))
    if kind == "cycle":
        return cycle(rng.randint(3, 6))
    if kind == "path":
        return path(rng.randint(2, 5))
    if kind == "point":
        return closure([1])
    if kind == "s0":
        return from_facets([[1], [2]])
    if kind == "empty":
        return Complex.empty()
    return simplex_boundary(tuple(range(1, rng.randint(2, 4) + 1)))


def random_join_pair(rng: random.Random, max_total: int = 10) -> tuple[Complex, Complex]:
    """Two non-void complexes whose vertex counts add up to at most ``max_total``."""
    n1 = rng.randint(0, max_total - 1)
    n2 = rng.randint(0, max_total - n1)
    a = random_complex(rng, max_vertices=n1, allow_trivial=False) if n1 else Complex.empty()
    b = random_complex(rng, max_vertices=n2, allow_trivial=False) if n2 else Complex.empty()
    return a, b


def random_cone(rng: random.Random) -> Complex:
    return join(random_complex(rng, max_vertices=5), closure([1]))
