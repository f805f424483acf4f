"""Join chain isomorphism and Kunneth-type predictions for joins and products."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import (
    Complex, Simplex, join, join_offset, link, product_ordered, product_vertex,
    product_width, simplex, union,
)
from .homology import (
    ZZ, ChainComplex, CoefficientRing, GradedModule, Group, augmental_chain,
    homology, homology_pair, tensor, tor1,
)
from .snf import SparseMatrix, invariant_factors


@dataclass(frozen=True)
class TensorChainComplex:
    """Tensor product of two augmented chain complexes.

    Basis elements of degree d are pairs ``(x, y)`` with ``dim x + dim y = d``,
    ordered by the positions of ``x`` and ``y`` in their own complexes.  The
    differential is ``d(x(*)y) = -dx(*)y + (-1)^dim(x) x(*)dy``, the sign
    convention of the suspended tensor complex.
    """

    basis: dict[int, list[tuple[Simplex, Simplex]]]
    boundary: dict[int, SparseMatrix]

    def size(self, d: int) -> int:
        return len(self.basis.get(d, []))

    def differential(self, d: int) -> SparseMatrix:
        m = self.boundary.get(d)
        return m if m is not None else SparseMatrix.zeros(self.size(d - 1), self.size(d))


def _global_order(cc: ChainComplex) -> dict[Simplex, int]:
    order: dict[Simplex, int] = {}
    for d in cc.degrees:
        for s in cc.basis[d]:
            order[s] = len(order)
    return order


def _face_boundary(s: Simplex) -> list[tuple[Simplex, int]]:
    return [(s[:i] + s[i + 1:], -1 if i % 2 else 1) for i in range(len(s))]


def tensor_chain(c1: ChainComplex, c2: ChainComplex) -> TensorChainComplex:
    o1, o2 = _global_order(c1), _global_order(c2)
    basis: dict[int, list[tuple[Simplex, Simplex]]] = {}
    for x in o1:
        for y in o2:
            basis.setdefault(len(x) + len(y) - 2, []).append((x, y))
    for d in basis:
        basis[d].sort(key=lambda p: (o1[p[0]], o2[p[1]]))
    index = {d: {p: i for i, p in enumerate(lst)} for d, lst in basis.items()}
    boundary = {}
    for d, lst in basis.items():
        lower = index.get(d - 1, {})
        cols = []
        for x, y in lst:
            col: dict[int, int] = {}
            for fx, sx in _face_boundary(x):
                j = lower.get((fx, y))
                if j is not None:
                    col[j] = col.get(j, 0) - sx
            sign = -1 if (len(x) - 1) % 2 else 1
            for fy, sy in _face_boundary(y):
                j = lower.get((x, fy))
                if j is not None:
                    col[j] = col.get(j, 0) + sign * sy
            cols.append({k: v for k, v in col.items() if v})
        boundary[d] = SparseMatrix(len(lower), len(lst), tuple(cols))
    return TensorChainComplex(basis, boundary)


@dataclass(frozen=True)
class ChainMap:
    """``matrices[d]`` sends source degree d to target degree ``d + degree_shift``."""

    source: ChainComplex
    target: TensorChainComplex
    matrices: dict[int, SparseMatrix]
    degree_shift: int = -1

    def commutes(self) -> bool:
        """Exact check of f o d == d o f in every degree."""
        for d in self.source.degrees:
            f_d = self.matrices[d]
            lhs = self.matrices.get(d - 1, SparseMatrix.zeros(self.target.size(d - 2), self.source.size(d - 1))) \
                @ self.source.differential(d)
            rhs = self.target.differential(d - 1) @ f_d
            if lhs.to_dense() != rhs.to_dense():
                return False
        return True

    def is_isomorphism(self) -> bool:
        """Square and unimodular in every degree, hence invertible over Z."""
        degrees = set(self.source.degrees) | {d - self.degree_shift for d in self.target.basis}
        for d in degrees:
            n_src, n_tgt = self.source.size(d), self.target.size(d + self.degree_shift)
            if n_src != n_tgt:
                return False
            if n_src == 0:
                continue
            if invariant_factors(self.matrices[d]) != (1,) * n_src:
                return False
        return True


def ez_join_map(a: Complex, b: Complex) -> ChainMap:
    """Chain isomorphism of degree -1 from the join chains to the tensor chains.

    A face g of the join splits uniquely as g1 + g2 and is sent to
    ``(-1)^(dim g + 1) [g1] (*) [g2]``.
    """
    if a.is_void or b.is_void:
        raise ValueError("join factors must be non-void")
    off = join_offset(a, b)
    whole = join(a, b, off)
    src = augmental_chain(whole)
    ca, cb = augmental_chain(a), augmental_chain(b)
    tgt = tensor_chain(ca, cb)
    index = {d: {p: i for i, p in enumerate(lst)} for d, lst in tgt.basis.items()}
    left = set(a.vertices)
    matrices = {}
    for d in src.degrees:
        cols = []
        for g in src.basis[d]:
            g1 = tuple(v for v in g if v in left)
            g2 = tuple(v - off for v in g if v not in left)
            sign = -1 if (len(g) % 2) else 1  # (-1)^(dim g + 1), dim g + 1 = len(g)
            cols.append({index[d - 1][(g1, g2)]: sign})
        matrices[d] = SparseMatrix(tgt.size(d - 1), len(cols), tuple(cols))
    return ChainMap(src, tgt, matrices, -1)


def _same_ring(m1: GradedModule, m2: GradedModule) -> CoefficientRing:
    if m1.ring != m2.ring:
        raise ValueError(f"mixed coefficient rings {m1.ring} and {m2.ring}")
    return m1.ring


def _tensor(ring: CoefficientRing, x: Group, y: Group) -> Group:
    return Group(x.rank * y.rank) if ring.is_field else tensor(x, y)


def _tor(ring: CoefficientRing, x: Group, y: Group) -> Group:
    return Group() if ring.is_field else tor1(x, y)


def kunneth_join_predict(m1: GradedModule, m2: GradedModule, include_tor: bool = True) -> GradedModule:
    """Homology of a join from the factors: degree q+1 collects tensor terms with
    i+j=q and Tor terms with i+j=q-1."""
    ring = _same_ring(m1, m2)
    out: dict[int, Group] = {}
    for i, x in m1.groups.items():
        for j, y in m2.groups.items():
            q = i + j
            out[q + 1] = out.get(q + 1, Group()) + _tensor(ring, x, y)
            if include_tor:
                out[q + 2] = out.get(q + 2, Group()) + _tor(ring, x, y)
    return GradedModule(ring, out)


@dataclass
class KunnethReport:
    holds: bool
    direct: GradedModule
    predicted: GradedModule
    mismatches: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"holds": self.holds, "direct": self.direct.to_json(),
                "predicted": self.predicted.to_json(), "mismatched_degrees": self.mismatches}


def _compare(direct: GradedModule, predicted: GradedModule, degrees=None) -> KunnethReport:
    ds = sorted(set(direct.degrees) | set(predicted.degrees)) if degrees is None else degrees
    bad = [d for d in ds if direct[d] != predicted[d]]
    return KunnethReport(not bad, direct, predicted, bad)


def join_pair(pair1: tuple[Complex, Complex], pair2: tuple[Complex, Complex]) -> tuple[Complex, Complex]:
    """``(G1*G2, (G1*D2) u (D1*G2))`` on a common vertex shift."""
    (g1, d1), (g2, d2) = pair1, pair2
    off = join_offset(g1, g2)
    top = join(g1, g2, off)

    def j(x: Complex, y: Complex) -> Complex:
        return Complex.void() if x.is_void or y.is_void else join(x, y, off)

    return top, union(j(g1, d2), j(d1, g2))


def _check_pair(pair: tuple[Complex, Complex]) -> None:
    if not pair[1].faces <= pair[0].faces:
        raise ValueError("second member of a pair must be a subcomplex of the first")


def kunneth_join_verify(pair1: tuple[Complex, Complex], pair2: tuple[Complex, Complex],
                        ring: CoefficientRing = ZZ, include_tor: bool = True) -> KunnethReport:
    _check_pair(pair1)
    _check_pair(pair2)
    top, sub = join_pair(pair1, pair2)
    direct = homology_pair(top, sub, ring)
    predicted = kunneth_join_predict(homology_pair(*pair1, ring=ring), homology_pair(*pair2, ring=ring),
                                     include_tor=include_tor)
    return _compare(direct, predicted)


# products of pairs

def product_case(x: tuple[Complex, Complex], y: tuple[Complex, Complex]) -> int:
    """Which of the four product cases applies (1..4)."""
    (x1, x2), (y1, y2) = x, y
    degenerate = x1.is_void or y1.is_void or x1.dim == -1 or y1.dim == -1
    if degenerate or (not x2.is_void and not y2.is_void):
        return 4
    if x2.is_void and y2.is_void:
        return 1
    return 2 if x2.is_void else 3


def product_pair(x: tuple[Complex, Complex], y: tuple[Complex, Complex]) -> tuple[Complex, Complex]:
    (x1, x2), (y1, y2) = x, y
    w = product_width(y1)
    top = product_ordered(x1, y1, w)
    sub = union(product_ordered(x1, y2, w), product_ordered(x2, y1, w))
    return top, sub


def kunneth_product_formula(case: int, hx1: GradedModule, hy1: GradedModule,
                            hx: GradedModule, hy: GradedModule, q: int) -> Group:
    """Right-hand side of the four-case product formula in degree ``q >= 0``.

    ``hx1``/``hy1`` are absolute homologies of the big complexes and ``hx``/``hy``
    the pair homologies.  The coefficient module is the ring itself.
    """
    if q < 0:
        raise ValueError("the product formula is stated for q >= 0")
    ring = _same_ring(hx1, hy1)
    _same_ring(hx, hy)
    unit = Group(1)
    left, right = {1: (hx1, hy1), 2: (hx1, hy), 3: (hx, hy1), 4: (hx, hy)}[case]

    def bracket(op, deg: int) -> Group:
        acc = Group()
        for i in range(0, deg + 1):
            acc = acc + op(ring, left[i], right[deg - i])
        return acc

    total = bracket(_tensor, q)
    if q >= 1:
        total = total + bracket(_tor, q - 1)
    if case in (1, 3):
        total = total + _tensor(ring, left[q], unit)
        if q >= 1:
            total = total + _tor(ring, left[q - 1], unit)
    if case in (1, 2):
        total = total + _tensor(ring, unit, right[q])
        if q >= 1:
            total = total + _tor(ring, unit, right[q - 1])
    return total


def kunneth_product_predict(x: tuple[Complex, Complex], y: tuple[Complex, Complex], q: int,
                            ring: CoefficientRing = ZZ, case: int | None = None) -> Group:
    actual = product_case(x, y)
    if case is not None and case != actual:
        raise ValueError(f"case {case} requested but the pairs satisfy case {actual}")
    return kunneth_product_formula(
        actual, homology(x[0], ring), homology(y[0], ring),
        homology_pair(*x, ring=ring), homology_pair(*y, ring=ring), q)


def kunneth_product_verify(x: tuple[Complex, Complex], y: tuple[Complex, Complex],
                           ring: CoefficientRing = ZZ) -> KunnethReport:
    """Compare direct product-pair homology with the prediction in degrees q >= 0."""
    _check_pair(x)
    _check_pair(y)
    top, sub = product_pair(x, y)
    direct = homology_pair(top, sub, ring)
    top_deg = max(int(max(top.dim, 0)), 0) + 1
    pred = {q: kunneth_product_predict(x, y, q, ring) for q in range(0, top_deg + 1)}
    predicted = GradedModule(ring, pred)
    nonneg = GradedModule(ring, {d: g for d, g in direct.groups.items() if d >= 0})
    return _compare(nonneg, predicted, list(range(0, top_deg + 1)))


# local link formula

def staircase(s1: Simplex, s2: Simplex, width: int) -> Simplex:
    """A maximal chain in the product of two simplices (first coordinate moves first)."""
    chain = [(v, s2[0]) for v in s1] + [(s1[-1], v) for v in s2[1:]]
    return simplex(product_vertex(x, y, width) for x, y in chain)


@dataclass
class LinkFormulaReport:
    holds: bool
    product_link: GradedModule | None
    predicted: GradedModule
    join_link: GradedModule

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "product_link": None if self.product_link is None else self.product_link.to_json(),
                "predicted": self.predicted.to_json(), "join_link": self.join_link.to_json()}


def link_formula_verify(a: Complex, b: Complex, s1: Simplex, s2: Simplex,
                        ring: CoefficientRing = ZZ) -> LinkFormulaReport:
    """Compare link homologies in the product, the join, and the Kunneth sum.

    For nonempty faces the product face is a staircase chain, which has the
    same dimension as ``s1`` and ``s2`` combined.  With both faces empty
    there is no product face and only the join leg is compared.
    """
    s1, s2 = simplex(s1), simplex(s2)
    if s1 not in a or s2 not in b:
        raise ValueError("faces must belong to their complexes")
    predicted = kunneth_join_predict(homology(link(a, s1), ring), homology(link(b, s2), ring))
    off = join_offset(a, b)
    whole = join(a, b, off)
    join_face = simplex(s1 + tuple(v + off for v in s2))
    jl = homology(link(whole, join_face), ring)
    ok = jl == predicted
    pl = None
    if s1 and s2:
        w = product_width(b)
        prod = product_ordered(a, b, w)
        sigma = staircase(s1, s2, w)
        pl = homology(link(prod, sigma), ring)
        ok = ok and pl == predicted
    return LinkFormulaReport(ok, pl, predicted, jl)
