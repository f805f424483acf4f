from __future__ import annotations

import random
from itertools import combinations

import pytest
from sympy import Matrix, ZZ as SZZ
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from augtop.complex import Complex, closure, costar, from_facets, link
from augtop.corpus import corpus
from augtop.generators import random_complex, random_subcomplex
from augtop.homology import (
    GF, QQ, ZZ, CoefficientRing, GradedModule, Group, augmental_chain,
    cohomology_from_homology, euler_characteristic, homology, homology_pair,
    local_homology, parse_ring, reduce_coefficients, tensor, tor1,
)

EMPTY = Complex.empty()
VOID = Complex.void()
S0 = from_facets([[1], [2]])


def gm(ring=ZZ, **groups):
    return GradedModule(ring, {int(k.replace("m", "-").lstrip("d")): v for k, v in groups.items()})


def oracle_homology(faces, sub_faces=frozenset()):
    """Independent dense computation with sympy: returns {d: (rank, torsion)}."""
    cells = sorted(set(faces) - set(sub_faces), key=lambda s: (len(s), s))
    by_deg = {}
    for s in cells:
        by_deg.setdefault(len(s) - 1, []).append(s)
    out = {}

    def mat(d):
        src, dst = by_deg.get(d, []), by_deg.get(d - 1, [])
        if not src or not dst:
            return None, 0
        pos = {s: i for i, s in enumerate(dst)}
        m = [[0] * len(src) for _ in dst]
        for j, s in enumerate(src):
            for i in range(len(s)):
                f = s[:i] + s[i + 1:]
                if f in pos:
                    m[pos[f]][j] = (-1) ** i
        return m, Matrix(m).rank()

    for d in by_deg:
        _, r_out = mat(d)
        m_in, r_in = mat(d + 1)
        tors = ()
        if m_in is not None:
            tors = tuple(int(abs(x)) for x in sympy_factors(Matrix(m_in), domain=SZZ) if abs(x) > 1)
        rank = len(by_deg[d]) - r_out - r_in
        if rank or tors:
            out[d] = (rank, tors)
    return out


def as_dict(m):
    return {d: (g.rank, g.torsion) for d, g in m.groups.items()}


def test_parse_ring():
    assert parse_ring("Z") == ZZ
    assert parse_ring("Q") == QQ
    assert parse_ring("Zp:3") == GF(3)
    assert parse_ring("Z3") == GF(3)
    with pytest.raises(ValueError):
        parse_ring("Zp:4")
    with pytest.raises(ValueError):
        parse_ring("R")


def test_augmental_chain_examples():
    cc = augmental_chain(EMPTY)
    assert cc.basis == {-1: [()]}
    assert augmental_chain(VOID).basis == {}
    cc = augmental_chain(closure([1, 2]))
    assert cc.basis[1] == [(1, 2)]
    assert cc.boundary[1].to_dense() == [[-1], [1]]  # d[12] = [2] - [1]
    assert cc.boundary[0].to_dense() == [[1, 1]]


def test_boundary_squares_to_zero():
    rng = random.Random(1)
    for _ in range(40):
        cc = augmental_chain(random_complex(rng, 7))
        for d in cc.degrees:
            prod = cc.differential(d - 1) @ cc.differential(d)
            assert prod.is_zero()


def test_augmentation_table():
    assert homology(EMPTY) == GradedModule(ZZ, {-1: Group(1)})
    assert homology(closure([1])).is_zero
    assert homology(S0) == GradedModule(ZZ, {0: Group(1)})
    assert homology(VOID).is_zero


def test_pair_examples():
    point = closure([1])
    assert homology_pair(point, EMPTY) == GradedModule(ZZ, {0: Group(1)})
    c = corpus("s1_3")
    assert homology_pair(c, c).is_zero
    assert homology_pair(closure([1, 2]), S0) == GradedModule(ZZ, {1: Group(1)})
    with pytest.raises(ValueError):
        homology_pair(S0, closure([3]))


def test_pair_case_table():
    rng = random.Random(5)
    for _ in range(20):
        c = random_complex(rng, 6, allow_trivial=False)
        assert homology_pair(c, VOID) == homology(c)
        unreduced = homology_pair(c, EMPTY)
        red = homology(c)
        # unreduced = reduced plus one extra Z in degree 0
        assert unreduced[0].rank == red[0].rank + 1
        for d in set(red.degrees) - {0, -1}:
            assert unreduced[d] == red[d]
    assert homology_pair(EMPTY, VOID) == GradedModule(ZZ, {-1: Group(1)})


def test_local_homology_examples():
    assert local_homology(closure([1, 2]), (1, 2)) == GradedModule(ZZ, {1: Group(1)})
    c = corpus("theta")
    assert local_homology(c, ()) == homology(c)
    assert local_homology(corpus("s1_3"), (1,)) == GradedModule(ZZ, {1: Group(1)})
    with pytest.raises(ValueError):
        local_homology(S0, (3,))


def test_corpus_homology_against_oracle():
    for name in ["theta", "moebius5", "cylinder", "rp2_6", "s2_4", "square_product", "rp2_6*point"]:
        c = corpus(name)
        assert as_dict(homology(c)) == oracle_homology(c.faces), name


def test_random_pairs_against_oracle():
    rng = random.Random(11)
    for _ in range(40):
        c = random_complex(rng, 6)
        sub = random_subcomplex(rng, c)
        assert as_dict(homology_pair(c, sub)) == oracle_homology(c.faces, sub.faces)


def test_known_values():
    rp2 = corpus("rp2_6")
    assert homology(rp2) == GradedModule(ZZ, {1: Group(0, (2,))})
    assert homology(rp2, GF(2)) == GradedModule(GF(2), {1: Group(1), 2: Group(1)})
    assert homology(rp2, QQ).is_zero
    assert homology(corpus("theta")) == GradedModule(ZZ, {1: Group(2)})


def test_tensor_and_tor():
    z, z2 = Group(1), Group(0, (2,))
    assert tor1(z, z2).is_zero
    assert tor1(z2, z2) == z2
    assert tensor(Group(1, (2,)), z2) == Group(0, (2, 2))
    assert tensor(Group(0, (4,)), Group(0, (6,))) == Group(0, (2,))
    assert tensor(Group(2), Group(3)) == Group(6)


def test_universal_coefficients_random():
    rng = random.Random(21)
    for _ in range(40):
        c = random_complex(rng, 7)
        hz = homology(c)
        for ring in (GF(2), GF(3), QQ):
            assert homology(c, ring) == reduce_coefficients(hz, ring)


def test_euler_characteristic_matches_f_vector():
    rng = random.Random(8)
    for _ in range(30):
        c = random_complex(rng, 7)
        f = c.f_vector()
        alternating = sum((-1) ** (i % 2) * n for i, n in enumerate(f))  # index i is degree i-1
        assert euler_characteristic(homology(c, QQ)) == -alternating


def test_cohomology_via_universal_coefficients():
    h = homology(corpus("rp2_6"))
    assert cohomology_from_homology(h) == GradedModule(ZZ, {2: Group(0, (2,))})


def test_local_homology_shift_random():
    rng = random.Random(2)
    for _ in range(30):
        c = random_complex(rng, 6)
        for s in c.faces:
            lk = homology(link(c, s))
            loc = local_homology(c, s)
            assert {d - len(s): g for d, g in loc.groups.items()} == dict(lk.groups)


def test_graded_module_json():
    h = homology(corpus("rp2_6"))
    assert h.to_json() == [{"degree": 1, "rank": 0, "torsion": [2]}]
    assert GradedModule.from_json(ZZ, h.to_json()) == h
    assert homology(corpus("s0"), GF(2)).to_json() == [{"degree": 0, "rank": 1, "torsion": []}]
