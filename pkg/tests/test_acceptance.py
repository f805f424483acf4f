"""Acceptance gate: one printed PASS/FAIL line per criterion."""

from __future__ import annotations

import random
import time

import pytest

from augtop import calculus
from augtop.complex import Complex, closure, from_facets, join, link, product_ordered, union
from augtop.corpus import corpus, names
from augtop.generators import random_complex, random_join_pair, random_pure_complex
from augtop.homology import GF, QQ, ZZ, GradedModule, Group, homology, local_homology
from augtop.iso import is_isomorphic
from augtop.kunneth import ez_join_map, kunneth_join_predict, kunneth_join_verify
from augtop.manifolds import (
    boundary, boundary_link_commutes, is_homology_manifold, is_pseudomanifold,
    is_quasi_manifold, orientable,
)
from augtop.ring_props import hilbert_function, is_cohen_macaulay, is_gorenstein

VOID = Complex.void()
EMPTY = Complex.empty()
POINT = closure([1])
S0 = from_facets([[1], [2]])


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\nCRITERION {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_criterion_01_augmentation_table(report):
    ok = (homology(EMPTY) == GradedModule(ZZ, {-1: Group(1)})
          and homology(POINT).is_zero
          and homology(S0) == GradedModule(ZZ, {0: Group(1)})
          and homology(VOID).is_zero)
    report(1, ok, "augmentation table, exact")


def test_criterion_02_boundary_examples(report):
    edge = join(POINT, POINT)
    ok = (boundary(POINT) == EMPTY
          and boundary(S0).is_void
          and boundary(edge) == from_facets([[v] for v in edge.vertices])
          and boundary(join(S0, S0)).is_void)
    report(2, ok, "Bd(point), Bd(two points), Bd(edge), Bd(square), exact sets")


def test_criterion_03_moebius_cone(report):
    m = corpus("moebius5")
    whole = join(m, POINT)
    off = max(m.vertices) + 1
    bd = boundary(whole, GF(3))
    predicted = union(join(boundary(m, GF(3)), POINT, off), join(m, EMPTY, off))
    h = homology(bd)
    ok = bd == predicted and h[1] == Group(0, (2,)) and h[2].is_zero
    report(3, ok and is_isomorphic(bd, corpus("rp2_6")), f"boundary f-vector {bd.f_vector()}, H = {h.to_json()}")


def test_criterion_04_theta(report):
    direct = homology(corpus("theta"))
    three = from_facets([[1], [2], [3]])
    rep = kunneth_join_verify((POINT, EMPTY), (three, VOID))
    expected = GradedModule(ZZ, {1: Group(2)})
    ok = direct == expected and rep.direct == expected and rep.holds
    report(4, ok, "direct and relative-join routes both give rank 2 in degree 1")


def test_criterion_05_tor_witness(report):
    t0 = time.perf_counter()
    rp = (corpus("rp2_6"), VOID)
    rep = kunneth_join_verify(rp, rp)
    control = kunneth_join_verify(rp, rp, include_tor=False)
    elapsed = time.perf_counter() - t0
    ok = (rep.holds and rep.direct[4] == Group(0, (2,))
          and rep.predicted == kunneth_join_predict(homology(rp[0]), homology(rp[0]))
          and not control.holds and elapsed < 60)
    report(5, ok, f"H4 = {rep.direct[4].torsion}, no-Tor control fails: {not control.holds}, {elapsed:.2f}s")


def test_criterion_06_ez_isomorphism(report):
    rng = random.Random(6)
    bad = []
    for i in range(200):
        a, b = random_join_pair(rng, 10)
        f = ez_join_map(a, b)
        if not (f.commutes() and f.is_isomorphism()):
            bad.append(i)
    report(6, not bad, f"200 random joins, failures {bad[:5]}")


def test_criterion_07_local_homology(report):
    rng = random.Random(7)
    bad = 0
    checked = 0
    for _ in range(100):
        c = random_complex(rng, 8)
        for ring in (ZZ, QQ, GF(2)):
            for s in c.faces:
                lk = homology(link(c, s), ring)
                loc = local_homology(c, s, ring)
                shifted = {d - len(s): g for d, g in loc.groups.items()}
                checked += 1
                if shifted != dict(lk.groups):
                    bad += 1
    report(7, bad == 0, f"{checked} face/ring checks, {bad} mismatches")


def test_criterion_08_manifold_hierarchy(report):
    rng = random.Random(8)
    cases = [corpus(n) for n in names()] + [random_pure_complex(rng) for _ in range(100)]
    chain_bad = 0
    for c in cases:
        for ring in (ZZ, QQ, GF(2)):
            hm, q, p = is_homology_manifold(c, ring), is_quasi_manifold(c, ring), is_pseudomanifold(c)
            if (hm and not q) or (q and not p):
                chain_bad += 1
    comm_bad = []
    for name in names():
        c = corpus(name)
        if c.is_void or not is_quasi_manifold(c):
            continue
        for s in c.faces:
            if not boundary_link_commutes(c, s):
                comm_bad.append((name, s))
    report(8, chain_bad == 0 and not comm_bad,
           f"{len(cases)} complexes, chain violations {chain_bad}, commutation failures {comm_bad[:3]}")


def test_criterion_09_characteristic(report):
    rp2 = corpus("rp2_6")
    values = (is_cohen_macaulay(rp2, QQ), is_cohen_macaulay(rp2, GF(2)),
              orientable(rp2, GF(2)), orientable(rp2, ZZ))
    report(9, values == (True, False, True, False), f"CM_Q, CM_Z2, or_Z2, or_Z = {values}")


def test_criterion_10_hilbert_laws(report):
    rng = random.Random(10)
    n = 12
    bad = 0
    for _ in range(50):
        a, b = random_complex(rng, 6), random_complex(rng, 6)
        ha, hb = hilbert_function(a, n), hilbert_function(b, n)
        hj = hilbert_function(join(a, b), n)
        hp = hilbert_function(product_ordered(a, b), n)
        for m in range(n + 1):
            if hj[m] != sum(ha[u] * hb[m - u] for u in range(m + 1)) or hp[m] != ha[m] * hb[m]:
                bad += 1
                break
    report(10, bad == 0, f"50 random pairs to degree {n}, {bad} failures")


def test_criterion_11_calculus(report):
    rng = random.Random(11)
    failures = []
    for _ in range(100):
        a, b = random_complex(rng), random_complex(rng)
        failures += calculus.check_all(a, b)
    report(11, not failures, f"100 random complexes, failures {failures[:3]}")


def test_criterion_12_gorenstein_boundary(report):
    s1 = corpus("s1_3")
    b2 = join(s1, POINT)
    b3 = join(b2, POINT)
    results = []
    for ball in (b2, b3):
        bd = boundary(ball, QQ)
        results.append((is_gorenstein(bd, QQ), orientable(bd, QQ), orientable(ball, QQ)))
    ok = all(all(r) for r in results)
    report(12, ok, f"(Gorenstein bd, orientable bd, orientable ball) = {results}")
