"""Augmented abstract simplicial complexes.

A complex is either the void complex (no faces at all) or a downward closed
family of finite vertex sets that always contains the empty simplex ``()``.
Simplices are strictly increasing tuples of non-negative integer ids.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from itertools import combinations
import math

Simplex = tuple[int, ...]

EMPTY_SIMPLEX: Simplex = ()
NEG_INF = -math.inf

MAX_VERTICES = 4096


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical sorted tuple for a vertex collection."""
    s = tuple(sorted(set(int(v) for v in vertices)))
    if s and s[0] < 0:
        raise ValueError(f"negative vertex id in {s}")
    return s


def face_key(s: Simplex) -> tuple[int, Simplex]:
    return (len(s), s)


def subsets(s: Simplex) -> Iterable[Simplex]:
    for k in range(len(s) + 1):
        yield from combinations(s, k)


class Complex:
    """Immutable augmented simplicial complex.

    ``Complex.void()`` has no faces and dimension ``-inf``; ``Complex.empty()``
    is ``{()}`` with dimension -1.  Labels are display strings only and never
    take part in equality.
    """

    __slots__ = ("_faces", "_labels", "_facets", "_by_dim")

    def __init__(self, faces: frozenset[Simplex] | None, labels: Mapping[int, str] | None = None):
        self._faces = faces
        self._labels = dict(labels) if labels else {}
        self._facets: tuple[Simplex, ...] | None = None
        self._by_dim: dict[int, list[Simplex]] | None = None

    @classmethod
    def void(cls) -> Complex:
        return cls(None)

    @classmethod
    def empty(cls) -> Complex:
        return cls(frozenset([EMPTY_SIMPLEX]))

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], labels: Mapping[int, str] | None = None) -> Complex:
        """Downward closure of ``faces`` (always contains the empty simplex)."""
        closed: set[Simplex] = {EMPTY_SIMPLEX}
        for f in faces:
            s = simplex(f)
            if s in closed:
                continue
            closed.update(subsets(s))
        return cls(frozenset(closed), labels)

    @property
    def is_void(self) -> bool:
        return self._faces is None

    @property
    def faces(self) -> frozenset[Simplex]:
        return self._faces if self._faces is not None else frozenset()

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    @property
    def vertices(self) -> Simplex:
        return tuple(sorted(s[0] for s in self.faces if len(s) == 1))

    @property
    def dim(self) -> float | int:
        if self._faces is None:
            return NEG_INF
        return max(len(s) for s in self._faces) - 1

    @property
    def facets(self) -> tuple[Simplex, ...]:
        """Maximal faces in canonical order."""
        if self._facets is None:
            faces = self.faces
            maximal = []
            for s in faces:
                sset = set(s)
                # s is maximal iff no one-vertex extension is a face
                if not any(
                    tuple(sorted(sset | {v})) in faces
                    for v in self.vertices
                    if v not in sset
                ):
                    maximal.append(s)
            self._facets = tuple(sorted(maximal, key=face_key))
        return self._facets

    def faces_of_dim(self, d: int) -> list[Simplex]:
        if self._by_dim is None:
            by_dim: dict[int, list[Simplex]] = {}
            for s in self.faces:
                by_dim.setdefault(len(s) - 1, []).append(s)
            for lst in by_dim.values():
                lst.sort()
            self._by_dim = by_dim
        return list(self._by_dim.get(d, []))

    def sorted_faces(self) -> list[Simplex]:
        return sorted(self.faces, key=face_key)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts indexed from dimension -1; empty for the void complex."""
        if self.is_void:
            return ()
        counts = [0] * (int(self.dim) + 2)
        for s in self.faces:
            counts[len(s)] += 1
        return tuple(counts)

    def __contains__(self, s: object) -> bool:
        return isinstance(s, tuple) and s in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.sorted_faces())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._faces == other._faces

    def __hash__(self) -> int:
        return hash(self._faces)

    def __repr__(self) -> str:
        if self.is_void:
            return "Complex.void()"
        if self.dim == -1:
            return "Complex.empty()"
        return f"Complex.from_faces({[list(f) for f in self.facets]})"

    def with_labels(self, labels: Mapping[int, str]) -> Complex:
        return Complex(self._faces, labels)


def from_facets(facets: Iterable[Iterable[int]], void: bool = False,
                labels: Mapping[int, str] | None = None) -> Complex:
    facets = [list(f) for f in facets]
    if void:
        if facets:
            raise ValueError("a void complex cannot have facets")
        return Complex.void()
    for f in facets:
        for v in f:
            if int(v) < 0:
                raise ValueError(f"negative vertex id {v}")
    return Complex.from_faces(facets, labels)


def closure(s: Iterable[int]) -> Complex:
    """The full simplex on ``s`` (``{()}`` when ``s`` is empty)."""
    return Complex.from_faces([s])


def simplex_boundary(s: Simplex) -> Complex:
    """Proper faces of ``s``; void for the empty simplex."""
    if not s:
        return Complex.void()
    return Complex.from_faces(combinations(s, len(s) - 1))


def _restrict(c: Complex, faces: Iterable[Simplex]) -> Complex:
    fs = frozenset(faces)
    if not fs:
        return Complex.void()
    return Complex(fs, {v: l for v, l in c.labels.items()})


def link(c: Complex, s: Simplex) -> Complex:
    s = simplex(s)
    if s not in c:
        return Complex.void()
    if not s:
        return c
    sset = set(s)
    return _restrict(c, (tuple(v for v in f if v not in sset)
                         for f in c.faces if sset.issubset(f)))


def costar(c: Complex, s: Simplex) -> Complex:
    s = simplex(s)
    sset = set(s)
    return _restrict(c, (f for f in c.faces if not sset.issubset(f)))


def star_closed(c: Complex, s: Simplex) -> Complex:
    s = simplex(s)
    if s not in c:
        return Complex.void()
    faces = c.faces
    return _restrict(c, (f for f in faces if simplex(f + s) in faces))


def union(a: Complex, b: Complex) -> Complex:
    if a.is_void:
        return b
    if b.is_void:
        return a
    return Complex(a.faces | b.faces, {**a.labels, **b.labels})


def intersection(a: Complex, b: Complex) -> Complex:
    if a.is_void or b.is_void:
        return Complex.void()
    return _restrict(a, a.faces & b.faces)


def is_subcomplex(sub: Complex, c: Complex) -> bool:
    return sub.faces <= c.faces


def join_offset(a: Complex, b: Complex) -> int:
    """Shift applied to the right factor's ids so vertex sets are disjoint."""
    verts = a.vertices
    return verts[-1] + 1 if verts else 0


def shift(c: Complex, offset: int) -> Complex:
    if c.is_void:
        return c
    return Complex(frozenset(tuple(v + offset for v in f) for f in c.faces),
                   {v + offset: l for v, l in c.labels.items()})


def _join_raw(a: Complex, b: Complex) -> Complex:
    """Join of complexes whose vertex sets are already disjoint."""
    if a.is_void or b.is_void:
        return Complex.void()
    faces = frozenset(simplex(x + y) for x in a.faces for y in b.faces)
    return Complex(faces, {**a.labels, **b.labels})


def join(a: Complex, b: Complex, offset: int | None = None) -> Complex:
    """Simplicial join; the right factor is shifted by ``join_offset(a, b)``."""
    if a.is_void or b.is_void:
        return Complex.void()
    off = join_offset(a, b) if offset is None else offset
    shifted = shift(b, off)
    if set(a.vertices) & set(shifted.vertices):
        raise ValueError("join offset does not separate the vertex sets")
    return _join_raw(a, shifted)


def cone(c: Complex) -> Complex:
    return join(c, closure([0]))


def product_width(b: Complex) -> int:
    verts = b.vertices
    return verts[-1] + 1 if verts else 1


def product_vertex(v1: int, v2: int, width: int) -> int:
    return v1 * width + v2


def product_ordered(a: Complex, b: Complex, width: int | None = None) -> Complex:
    """Ordered simplicial product.

    Vertices are pairs ``(v1, v2)`` encoded as ``v1 * width + v2``; simplices
    are chains of pairs increasing in both coordinates whose projections are
    faces of the factors.
    """
    if a.is_void or b.is_void:
        return Complex.void()
    w = product_width(b) if width is None else width
    if b.vertices and b.vertices[-1] >= w:
        raise ValueError("product width too small for the right factor")
    pairs = [(x, y) for x in a.vertices for y in b.vertices]
    fa, fb = a.faces, b.faces
    faces: set[Simplex] = {EMPTY_SIMPLEX}

    def extend(chain: list[tuple[int, int]], sa: Simplex, sb: Simplex) -> None:
        faces.add(tuple(product_vertex(x, y, w) for x, y in chain))
        lx, ly = chain[-1]
        for x, y in pairs:
            if x < lx or y < ly or (x == lx and y == ly):
                continue
            na = sa if x == lx else sa + (x,)
            nb = sb if y == ly else sb + (y,)
            if na in fa and nb in fb:
                chain.append((x, y))
                extend(chain, na, nb)
                chain.pop()

    for x, y in pairs:
        extend([(x, y)], (x,), (y,))
    labels = {product_vertex(x, y, w): f"({a.label(x)},{b.label(y)})" for x, y in pairs}
    return Complex(frozenset(faces), labels)


def skeleton(c: Complex, p: int) -> Complex:
    if c.is_void:
        raise ValueError("skeleton of the void complex")
    if p < -1:
        raise ValueError("skeleton dimension must be >= -1")
    return _restrict(c, (f for f in c.faces if len(f) <= p + 1))


def codim1_skeleton(c: Complex) -> Complex:
    """The (dim - 1)-skeleton; void for void and for ``{()}``."""
    if c.is_void or c.dim == -1:
        return Complex.void()
    return skeleton(c, int(c.dim) - 1)


def delete_vertices(c: Complex, vertices: Iterable[int]) -> Complex:
    if c.is_void:
        raise ValueError("vertex deletion from the void complex")
    t = set(vertices)
    return _restrict(c, (f for f in c.faces if t.isdisjoint(f)))


def cone_points(c: Complex) -> Simplex:
    """Vertices lying in every facet."""
    if c.is_void:
        raise ValueError("cone points of the void complex")
    common = set(c.facets[0])
    for f in c.facets[1:]:
        common &= set(f)
    return tuple(sorted(common))


def core(c: Complex) -> Complex:
    return link(c, cone_points(c))


def is_pure(c: Complex) -> bool:
    return len({len(f) for f in c.facets}) <= 1


def _adjacent(f: Simplex, g: Simplex) -> bool:
    # overlap rule evaluated for the pair only
    return len(set(f) & set(g)) == max(len(f), len(g)) - 1


def strong_components(facets: Iterable[Simplex]) -> list[list[Simplex]]:
    """Group facets into classes connected through codimension-one overlaps."""
    facets = sorted(facets, key=face_key)
    parent = list(range(len(facets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # bucket by ridges so we do not test every pair
    ridges: dict[Simplex, list[int]] = {}
    for i, f in enumerate(facets):
        for r in combinations(f, len(f) - 1) if f else ():
            ridges.setdefault(r, []).append(i)
    for members in ridges.values():
        for j in members[1:]:
            if _adjacent(facets[members[0]], facets[j]):
                parent[find(j)] = find(members[0])
    groups: dict[int, list[Simplex]] = {}
    for i, f in enumerate(facets):
        groups.setdefault(find(i), []).append(f)
    return sorted(groups.values(), key=lambda g: face_key(g[0]))


def is_strongly_connected(c: Complex) -> bool:
    if c.is_void:
        return True
    return len(strong_components(c.facets)) == 1


def is_poset_connected(c: Complex, sub: Complex) -> bool:
    """Whether the faces of ``c`` outside ``sub`` form a connected poset.

    Two faces in the difference that are comparable are linked through a chain
    of covering relations inside the difference, since ``sub`` is closed
    downward.  An empty difference counts as disconnected.
    """
    rest = sorted(c.faces - sub.faces, key=face_key)
    if not rest:
        return False
    index = {f: i for i, f in enumerate(rest)}
    parent = list(range(len(rest)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for f, i in index.items():
        for r in combinations(f, len(f) - 1) if f else ():
            j = index.get(r)
            if j is not None:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(rest))}) == 1


def is_full_subcomplex(sub: Complex, c: Complex) -> bool:
    """Every face of ``c`` spanned by vertices of ``sub`` lies in ``sub``."""
    if not is_subcomplex(sub, c):
        return False
    vs = set(sub.vertices)
    return all(f in sub.faces for f in c.faces if vs.issuperset(f))


def relabel(c: Complex, mapping: Mapping[int, int]) -> Complex:
    if c.is_void:
        return c
    faces = frozenset(simplex(mapping[v] for v in f) for f in c.faces)
    if len(faces) != len(c.faces):
        raise ValueError("relabelling is not injective on faces")
    return Complex(faces, {mapping[v]: l for v, l in c.labels.items()})


def normalize(c: Complex) -> Complex:
    """Relabel vertices to 1..n preserving their order."""
    return relabel(c, {v: i + 1 for i, v in enumerate(c.vertices)})


# serialization

def to_json(c: Complex) -> dict:
    out: dict = {"void": c.is_void, "facets": [] if c.is_void or c.dim == -1 else [list(f) for f in c.facets]}
    if c.labels:
        out["labels"] = {str(k): v for k, v in sorted(c.labels.items())}
    return out


def from_json(obj: Mapping) -> Complex:
    if not isinstance(obj, Mapping) or "facets" not in obj:
        raise ValueError("complex JSON needs a 'facets' field")
    void = bool(obj.get("void", False))
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ValueError("'facets' must be a list of lists")
    for f in facets:
        for v in f:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"vertex id {v!r} is not an integer")
    labels = obj.get("labels")
    lab = {int(k): str(v) for k, v in labels.items()} if labels else None
    return from_facets(facets, void=void, labels=lab)


def parse_text(text: str) -> Complex:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if lines == ["VOID"]:
        return Complex.void()
    if lines == ["EMPTY"]:
        return Complex.empty()
    facets = []
    for line in lines:
        try:
            facets.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValueError(f"bad facet line {line!r}") from exc
    if not facets:
        raise ValueError("no facets found; use EMPTY or VOID")
    return from_facets(facets)


def to_text(c: Complex) -> str:
    if c.is_void:
        return "VOID\n"
    if c.dim == -1:
        return "EMPTY\n"
    return "".join(" ".join(map(str, f)) + "\n" for f in c.facets)


def f_vector(c: Complex) -> tuple[int, ...]:
    return c.f_vector()


def dim(c: Complex) -> float | int:
    return c.dim
