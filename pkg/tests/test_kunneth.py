from __future__ import annotations

import random

import pytest

from augtop.complex import Complex, closure, from_facets
from augtop.corpus import corpus
from augtop.generators import random_complex, random_join_pair, random_subcomplex
from augtop.homology import GF, QQ, ZZ, GradedModule, Group, homology, homology_pair
from augtop.kunneth import (
    ez_join_map, kunneth_join_predict, kunneth_join_verify, kunneth_product_formula,
    kunneth_product_predict, kunneth_product_verify, link_formula_verify,
    product_case, product_pair, tensor_chain,
)
from augtop.homology import augmental_chain

VOID = Complex.void()
EMPTY = Complex.empty()
POINT = closure([1])
S0 = from_facets([[1], [2]])
BALL1 = closure([1, 2])


def test_ez_on_empty_faces():
    f = ez_join_map(EMPTY, EMPTY)
    assert f.matrices[-1].to_dense() == [[1]]
    assert f.commutes() and f.is_isomorphism()


def test_ez_on_two_points():
    f = ez_join_map(POINT, POINT)
    # right vertex is shifted to 3; the edge goes to +[1](*)[1]
    src = f.source.basis[1]
    assert src == [(1, 3)]
    tgt = f.target.basis[0]
    col = f.matrices[1].to_dense()
    assert col[tgt.index(((1,), (1,)))] == [1]
    assert f.commutes() and f.is_isomorphism()


def test_tensor_differential_squares_to_zero():
    rng = random.Random(2)
    for _ in range(20):
        t = tensor_chain(augmental_chain(random_complex(rng, 4)), augmental_chain(random_complex(rng, 4)))
        for d in t.basis:
            assert (t.differential(d - 1) @ t.differential(d)).is_zero()


def test_ez_random_joins():
    rng = random.Random(7)
    for _ in range(40):
        a, b = random_join_pair(rng, 8)
        f = ez_join_map(a, b)
        assert f.commutes()
        assert f.is_isomorphism()


def test_join_prediction_examples():
    hs0 = homology(S0)
    assert kunneth_join_predict(hs0, hs0) == GradedModule(ZZ, {1: Group(1)})
    unit = homology(EMPTY)
    for name in ("theta", "rp2_6", "s1_3"):
        h = homology(corpus(name))
        assert kunneth_join_predict(unit, h) == h
        assert kunneth_join_predict(h, unit) == h
    hrp = homology(corpus("rp2_6"))
    pred = kunneth_join_predict(hrp, hrp)
    assert pred == GradedModule(ZZ, {3: Group(0, (2,)), 4: Group(0, (2,))})
    with pytest.raises(ValueError):
        kunneth_join_predict(hrp, homology(corpus("rp2_6"), QQ))


def test_join_verify_examples():
    three = from_facets([[1], [2], [3]])
    rep = kunneth_join_verify((POINT, EMPTY), (three, VOID))
    assert rep.holds and rep.direct == GradedModule(ZZ, {1: Group(2)})
    rep = kunneth_join_verify((S0, VOID), (S0, VOID))
    assert rep.holds and rep.direct == GradedModule(ZZ, {1: Group(1)})
    assert kunneth_join_verify((BALL1, S0), (S0, VOID)).holds
    with pytest.raises(ValueError):
        kunneth_join_verify((S0, closure([5])), (S0, VOID))


def test_join_verify_random_pairs():
    rng = random.Random(19)
    rings = (ZZ, QQ, GF(2), GF(3))
    for i in range(40):
        a = random_complex(rng, 4)
        b = random_complex(rng, 4)
        pa = (a, random_subcomplex(rng, a))
        pb = (b, random_subcomplex(rng, b))
        assert kunneth_join_verify(pa, pb, rings[i % 4]).holds


def test_product_cases():
    assert product_case((S0, VOID), (S0, VOID)) == 1
    assert product_case((POINT, VOID), (BALL1, S0)) == 2
    assert product_case((BALL1, S0), (POINT, VOID)) == 3
    assert product_case((BALL1, S0), (BALL1, S0)) == 4


def test_product_examples():
    assert kunneth_product_predict((S0, VOID), (S0, VOID), 0) == Group(3)
    top, sub = product_pair((S0, VOID), (S0, VOID))
    assert homology_pair(top, sub)[0] == Group(3)
    g = kunneth_product_predict((POINT, VOID), (BALL1, S0), 1)
    assert g == Group(1)
    with pytest.raises(ValueError):
        kunneth_product_predict((S0, VOID), (S0, VOID), 0, case=2)
    with pytest.raises(ValueError):
        kunneth_product_formula(1, homology(S0), homology(S0), homology(S0), homology(S0), -1)


def test_product_case_four_matches_unreduced():
    x = (corpus("s1_3"), EMPTY)
    y = (BALL1, EMPTY)
    rep = kunneth_product_verify(x, y)
    assert rep.holds


def test_product_verify_random():
    rng = random.Random(23)
    for i in range(25):
        a, b = random_complex(rng, 4, allow_trivial=False), random_complex(rng, 4, allow_trivial=False)
        pa = (a, random_subcomplex(rng, a))
        pb = (b, random_subcomplex(rng, b))
        rep = kunneth_product_verify(pa, pb, (ZZ, GF(2))[i % 2])
        assert rep.holds, (pa, pb, rep.mismatches)


def test_link_formula_examples():
    c = corpus("s1_4")
    rep = link_formula_verify(c, c, (1, 3), (1, 4))
    assert rep.holds
    assert len(rep.predicted.groups) == 1
    rep = link_formula_verify(c, corpus("theta"), (), ())
    assert rep.holds and rep.product_link is None
    assert rep.join_link == kunneth_join_verify((c, VOID), (corpus("theta"), VOID)).direct
    rep = link_formula_verify(BALL1, BALL1, (1,), (2,))
    assert rep.holds and rep.predicted.is_zero


def test_link_formula_random_faces():
    rng = random.Random(29)
    for _ in range(20):
        a, b = random_complex(rng, 4, allow_trivial=False), random_complex(rng, 4, allow_trivial=False)
        s1 = rng.choice(sorted(a.faces))
        s2 = rng.choice(sorted(b.faces))
        assert link_formula_verify(a, b, s1, s2).holds


def test_tor_negative_control():
    rp = (corpus("rp2_6"), VOID)
    assert not kunneth_join_verify(rp, rp, include_tor=False).holds
