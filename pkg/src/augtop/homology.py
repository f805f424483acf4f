"""Augmented chain complexes and their homology over Z, Q and Z/p."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from math import gcd
import re

from .complex import Complex, Simplex, costar, is_subcomplex, link, simplex
from .snf import SparseMatrix, invariant_factors, is_prime, normalize_torsion, rank_mod_p, rank_rational


@dataclass(frozen=True)
class CoefficientRing:
    """One of Z, Q or Z/p with p prime (``p`` is 0 for Z and Q)."""

    kind: str
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zp" and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind != "Zp" and self.p:
            raise ValueError("only Zp takes a modulus")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def __str__(self) -> str:
        return f"Z{self.p}" if self.kind == "Zp" else self.kind


ZZ = CoefficientRing("Z")
QQ = CoefficientRing("Q")


def GF(p: int) -> CoefficientRing:
    return CoefficientRing("Zp", p)


def parse_ring(text: str) -> CoefficientRing:
    """Accepts ``Z``, ``Q``, ``Zp:<p>`` and the short form ``Z<p>``."""
    t = text.strip()
    if t in ("Z", "ZZ"):
        return ZZ
    if t in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"Z(?:p:|/)?(\d+)", t)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"cannot parse coefficient ring {text!r}")


@dataclass(frozen=True)
class Group:
    """Finitely generated module: free rank plus invariant factors."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", normalize_torsion(list(self.torsion)))

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_cyclic_free(self) -> bool:
        """True for a single copy of the coefficient ring."""
        return self.rank == 1 and not self.torsion

    def __add__(self, other: Group) -> Group:
        return Group(self.rank + other.rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


ZERO = Group()


def tensor(a: Group, b: Group) -> Group:
    """Tensor product of finitely generated abelian groups."""
    tors = [d for d in b.torsion for _ in range(a.rank)]
    tors += [d for d in a.torsion for _ in range(b.rank)]
    tors += [gcd(d, e) for d in a.torsion for e in b.torsion]
    return Group(a.rank * b.rank, tuple(tors))


def tor1(a: Group, b: Group) -> Group:
    return Group(0, tuple(gcd(d, e) for d in a.torsion for e in b.torsion))


@dataclass(frozen=True)
class GradedModule:
    """Homology-style graded module; degrees not listed are zero."""

    ring: CoefficientRing
    groups: Mapping[int, Group] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {d: g for d, g in sorted(self.groups.items()) if not g.is_zero}
        if self.ring.is_field and any(g.torsion for g in clean.values()):
            raise ValueError("torsion in a vector space")
        object.__setattr__(self, "groups", clean)

    def __getitem__(self, degree: int) -> Group:
        return self.groups.get(degree, ZERO)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.groups)

    @property
    def is_zero(self) -> bool:
        return not self.groups

    def rank(self, degree: int) -> int:
        return self[degree].rank

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self.ring == other.ring and dict(self.groups) == dict(other.groups)

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.groups.items())))

    def to_json(self) -> list[dict]:
        return [{"degree": d, "rank": g.rank, "torsion": list(g.torsion)} for d, g in self.groups.items()]

    @classmethod
    def from_json(cls, ring: CoefficientRing, items: Iterable[Mapping]) -> GradedModule:
        return cls(ring, {int(it["degree"]): Group(int(it["rank"]), tuple(it["torsion"])) for it in items})

    def __str__(self) -> str:
        if not self.groups:
            return "0"
        return ", ".join(f"H{d}={g}" for d, g in self.groups.items())


@dataclass(frozen=True)
class ChainComplex:
    """``basis[d]`` lists simplices of degree d; ``boundary[d]`` maps degree d to d-1."""

    basis: dict[int, list[Simplex]]
    boundary: dict[int, SparseMatrix]

    @property
    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def size(self, d: int) -> int:
        return len(self.basis.get(d, []))

    def differential(self, d: int) -> SparseMatrix:
        m = self.boundary.get(d)
        if m is None:
            return SparseMatrix.zeros(self.size(d - 1), self.size(d))
        return m


def _faces_by_degree(faces: Iterable[Simplex]) -> dict[int, list[Simplex]]:
    out: dict[int, list[Simplex]] = {}
    for f in faces:
        out.setdefault(len(f) - 1, []).append(f)
    for lst in out.values():
        lst.sort()
    return out


def _chain_from_faces(faces: Iterable[Simplex]) -> ChainComplex:
    """Quotient chain complex spanned by ``faces``; missing faces count as zero."""
    basis = _faces_by_degree(faces)
    index = {d: {s: i for i, s in enumerate(lst)} for d, lst in basis.items()}
    boundary: dict[int, SparseMatrix] = {}
    for d, lst in basis.items():
        lower = index.get(d - 1, {})
        cols = []
        for s in lst:
            col = {}
            for i in range(len(s)):
                j = lower.get(s[:i] + s[i + 1:])
                if j is not None:
                    col[j] = -1 if i % 2 else 1
            cols.append(col)
        boundary[d] = SparseMatrix(len(lower), len(lst), tuple(cols))
    return ChainComplex(basis, boundary)


def augmental_chain(c: Complex, ring: CoefficientRing | None = None) -> ChainComplex:
    """Chains on every face including the empty simplex in degree -1.

    The matrices are integral for every ring; reduction happens when ranks are
    taken.
    """
    return _chain_from_faces(c.faces)


def relative_chain(c: Complex, sub: Complex) -> ChainComplex:
    if not is_subcomplex(sub, c):
        raise ValueError("second complex is not a subcomplex of the first")
    return _chain_from_faces(c.faces - sub.faces)


def _rank(mat: SparseMatrix, ring: CoefficientRing) -> int:
    if ring.kind == "Zp":
        return rank_mod_p(mat, ring.p)
    if ring.kind == "Q":
        return rank_rational(mat)
    return len(invariant_factors(mat))


def homology(cc: ChainComplex | Complex, ring: CoefficientRing = ZZ) -> GradedModule:
    if isinstance(cc, Complex):
        cc = augmental_chain(cc)
    degrees = cc.degrees
    if not degrees:
        return GradedModule(ring, {})
    factors: dict[int, tuple[int, ...]] = {}
    ranks: dict[int, int] = {}
    for d in range(degrees[0], degrees[-1] + 2):
        mat = cc.differential(d)
        if mat.nrows == 0 or mat.ncols == 0:
            ranks[d] = 0
            factors[d] = ()
        elif ring.kind == "Z":
            factors[d] = invariant_factors(mat)
            ranks[d] = len(factors[d])
        else:
            ranks[d] = _rank(mat, ring)
    groups = {}
    for d in degrees:
        free = cc.size(d) - ranks[d] - ranks[d + 1]
        tors = tuple(x for x in factors.get(d + 1, ()) if x > 1) if ring.kind == "Z" else ()
        groups[d] = Group(free, tors)
    return GradedModule(ring, groups)


def homology_pair(c: Complex, sub: Complex, ring: CoefficientRing = ZZ) -> GradedModule:
    return homology(relative_chain(c, sub), ring)


def local_homology(c: Complex, s: Simplex, ring: CoefficientRing = ZZ) -> GradedModule:
    """Homology of ``(c, costar(c, s))``."""
    s = simplex(s)
    if c.is_void or s not in c:
        raise ValueError(f"simplex {s} is not a face of the complex")
    return homology_pair(c, costar(c, s), ring)


def link_homology(c: Complex, s: Simplex, ring: CoefficientRing = ZZ) -> GradedModule:
    return homology(link(c, s), ring)


def shift_degrees(m: GradedModule, k: int) -> GradedModule:
    return GradedModule(m.ring, {d + k: g for d, g in m.groups.items()})


def reduce_coefficients(m: GradedModule, ring: CoefficientRing) -> GradedModule:
    """Universal coefficient prediction from integral homology."""
    if m.ring != ZZ:
        raise ValueError("integral homology required")
    if ring == ZZ:
        return m
    out: dict[int, Group] = {}
    for d in set(m.degrees) | {d + 1 for d in m.degrees}:
        if ring.kind == "Q":
            out[d] = Group(m[d].rank)
        else:
            zp = Group(0, (ring.p,))
            out[d] = Group(_count(tensor(m[d], zp), ring.p) + _count(tor1(m[d - 1], zp), ring.p))
    return GradedModule(ring, out)


def cohomology_from_homology(m: GradedModule) -> GradedModule:
    """Cohomology via universal coefficients: rank of H_d plus torsion of H_{d-1}."""
    if m.ring.is_field:
        return m
    out = {}
    for d in set(m.degrees) | {d + 1 for d in m.degrees}:
        out[d] = Group(m[d].rank, m[d - 1].torsion)
    return GradedModule(m.ring, out)


def _count(g: Group, p: int) -> int:
    """Dimension over Z/p of a group already killed by p."""
    return g.rank + sum(1 for d in g.torsion if d % p == 0)


def euler_characteristic(m: GradedModule) -> int:
    return sum((-1) ** (d % 2) * g.rank for d, g in m.groups.items())
