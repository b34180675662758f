"""Rational convex polytopes: hulls, face lattices, polarity, normalization, volume."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import factorial, gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import DegenerateError, FaceRangeError, OriginError
from .exactla import det, dot, extreme_rays, qvec, rank, row_basis
from .exactla.linalg import primitive, scale, sub


@dataclass(frozen=True)
class Face:
    id: int
    dim: int
    vertex_ids: tuple
    affine_span: tuple  # (point, direction basis); (None, ()) for the empty face

    def __contains__(self, vertex_id):
        return vertex_id in self.vertex_ids


@dataclass(frozen=True)
class FaceLattice:
    faces: tuple
    incidence: tuple  # covering pairs (child id, parent id)

    @property
    def top(self) -> Face:
        return self.faces[-1]

    @property
    def bottom(self) -> Face:
        return self.faces[0]


def _closed_sets(ground: frozenset, generators: Iterable[frozenset]) -> set:
    """Close ``generators`` under intersection and add the ground set."""
    closed = {ground}
    frontier = [frozenset(g) for g in generators]
    for g in frontier:
        if g in closed:
            continue
        new = {g}
        for c in closed:
            new.add(c & g)
        closed |= new
    # one pass over the generators suffices: every intersection of generators
    # appears because each generator is intersected with all earlier sets
    return closed


def face_lattice_from_incidence(points, facet_sets, dim_of) -> tuple:
    """Faces and covering relation from vertex-facet incidence.

    ``dim_of`` maps a vertex-id set to the dimension of the face it spans.
    Faces come back sorted by ``(dim, vertex ids)``.
    """
    ground = frozenset(range(len(points)))
    sets = _closed_sets(ground, facet_sets)
    keyed = sorted(((dim_of(s), tuple(sorted(s))) for s in sets))
    ids = {vs: i for i, (_, vs) in enumerate(keyed)}
    pairs = []
    for d, vs in keyed:
        for d2, vs2 in keyed:
            if d2 == d + 1 and set(vs) <= set(vs2):
                pairs.append((ids[vs], ids[vs2]))
    return keyed, tuple(sorted(pairs))


class Polytope:
    """A full-dimensional rational polytope with its facets and face lattice.

    Build one with :func:`hull`; the constructor trusts its arguments.
    Facets are pairs ``(a, b)`` meaning ``<a, x> <= b`` with ``a`` primitive
    integral.
    """

    def __init__(self, vertices, facets, face_lattice: FaceLattice):
        self.vertices = tuple(vertices)
        self.facets = tuple(facets)
        self.face_lattice = face_lattice
        self.ambient_dim = len(self.vertices[0])
        self._by_vertices = {frozenset(f.vertex_ids): f for f in face_lattice.faces}

    def __repr__(self):
        return f"Polytope(dim={self.ambient_dim}, vertices={len(self.vertices)}, facets={len(self.facets)})"

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def faces(self):
        return self.face_lattice.faces

    @cached_property
    def origin_interior(self) -> bool:
        return all(b > 0 for _, b in self.facets)

    def proper_faces(self) -> list:
        return [f for f in self.faces if 0 <= f.dim < self.ambient_dim]

    def faces_of_dim(self, d: int) -> list:
        return [f for f in self.faces if f.dim == d]

    def f_vector(self) -> list:
        return [len(self.faces_of_dim(d)) for d in range(self.ambient_dim)]

    def face(self, vertex_ids) -> Optional[Face]:
        return self._by_vertices.get(frozenset(vertex_ids))

    def face_vertices(self, face: Face) -> list:
        return [self.vertices[i] for i in face.vertex_ids]

    def facet_vertex_ids(self, k: int) -> frozenset:
        a, b = self.facets[k]
        return frozenset(i for i, v in enumerate(self.vertices) if dot(a, v) == b)

    def facets_containing(self, face: Face) -> list:
        ids = set(face.vertex_ids)
        return [k for k in range(len(self.facets)) if ids <= self.facet_vertex_ids(k)]

    def is_subface(self, small: Face, big: Face) -> bool:
        return set(small.vertex_ids) <= set(big.vertex_ids)

    def contains(self, x) -> bool:
        return all(dot(a, x) <= b for a, b in self.facets)

    def children(self, face: Face) -> list:
        kids = {c for c, p in self.face_lattice.incidence if p == face.id}
        return [self.faces[c] for c in sorted(kids)]

    @cached_property
    def polar(self) -> "Polytope":
        return polar(self)


def _affine_dim(points) -> int:
    if not points:
        return -1
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    return rank(diffs) if diffs else 0


def _canonical_facet(ray) -> tuple:
    # ray = (beta, alpha) with beta + <alpha, x> >= 0  <=>  <-alpha, x> <= beta
    beta, alpha = ray[0], ray[1:]
    normal = tuple(-a for a in alpha)
    g = reduce(gcd, normal, 0)
    return tuple(Fraction(a // g) for a in normal), Fraction(beta, g)


def hull(points: Iterable[Sequence]) -> Polytope:
    """Convex hull of finitely many rational points, as a full-dimensional polytope."""
    pts = sorted(set(qvec(p) for p in points))
    if not pts:
        raise DegenerateError("no points given", affine_dim=-1)
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have different lengths")
    adim = _affine_dim(pts)
    if adim < n:
        raise DegenerateError(f"points span an affine subspace of dimension {adim} < {n}", affine_dim=adim)

    lifted = [(Fraction(1),) + p for p in pts]
    rays, lineality = extreme_rays(lifted, [], n + 1)
    assert not lineality
    facets = sorted(_canonical_facet(r) for r in rays)

    tight = [[dot(a, p) == b for a, b in facets] for p in pts]
    vertices = [
        p for p, row in zip(pts, tight)
        if rank([facets[k][0] for k, t in enumerate(row) if t] or [(0,) * n]) == n
    ]
    vertices.sort()
    facet_sets = [
        frozenset(i for i, v in enumerate(vertices) if dot(a, v) == b) for a, b in facets
    ]

    def dim_of(ids):
        return _affine_dim([vertices[i] for i in sorted(ids)])

    keyed, pairs = face_lattice_from_incidence(vertices, facet_sets, dim_of)
    faces = []
    for i, (d, vs) in enumerate(keyed):
        if vs:
            base = vertices[vs[0]]
            span = (base, tuple(row_basis([sub(vertices[j], base) for j in vs[1:]])))
        else:
            span = (None, ())
        faces.append(Face(i, d, vs, span))
    return Polytope(vertices, facets, FaceLattice(tuple(faces), pairs))


def _require_origin(P: Polytope):
    if not P.origin_interior:
        raise OriginError("the origin is not an interior point of the polytope")


def polar(P: Polytope) -> Polytope:
    """The polar ``{v : <v, u> >= -1 for all u in P}``; one vertex ``-a/b`` per facet."""
    _require_origin(P)
    return hull([scale(Fraction(-1) / b, a) for a, b in P.facets])


def dual_face(P: Polytope, F: Face) -> Face:
    """The face of the polar pairing with ``F`` at inner product -1."""
    if F.dim < 0 or F.dim >= P.ambient_dim:
        raise FaceRangeError(f"face {F.id} has dimension {F.dim}; need a proper nonempty face")
    Q = P.polar
    xs = P.face_vertices(F)
    ids = [j for j, y in enumerate(Q.vertices) if all(dot(x, y) == -1 for x in xs)]
    E = Q.face(ids)
    if E is None:  # pragma: no cover - would contradict polar duality
        raise RuntimeError(f"no face of the polar has vertex set {ids}")
    return E


def dual_face_map(P: Polytope) -> dict:
    """Face id of ``P`` -> face id of the polar, over proper nonempty faces."""
    return {F.id: dual_face(P, F).id for F in P.proper_faces()}


def normalize(P: Polytope):
    """Smallest ``lam > 0`` making every vertex of ``lam * P`` integral.

    Every admissible scale is an integer multiple of this one, so it is also
    the only candidate for the canonical normalization that additionally asks
    for a primitive vertex; check that with :func:`has_primitive_vertex`.
    Returns ``(lam, lam * P)``.
    """
    _require_origin(P)
    coords = [c for v in P.vertices for c in v]
    den = reduce(lcm, (c.denominator for c in coords), 1)
    num_gcd = reduce(gcd, (int(c * den) for c in coords), 0)
    lam = Fraction(den, num_gcd)
    return lam, hull([scale(lam, v) for v in P.vertices])


def has_primitive_vertex(P: Polytope) -> bool:
    return any(
        all(c.denominator == 1 for c in v) and reduce(gcd, (int(c) for c in v), 0) == 1
        for v in P.vertices
    )


def dilate(P: Polytope, lam) -> Polytope:
    return hull([scale(lam, v) for v in P.vertices])


def triangulate(P: Polytope) -> list:
    """Pulling triangulation: cone each face from its smallest vertex over the
    facets of that face not containing it.  Returns vertex-id tuples."""
    memo: dict = {}

    def tri(face: Face):
        if face.id in memo:
            return memo[face.id]
        if face.dim == 0:
            out = [face.vertex_ids]
        else:
            apex = face.vertex_ids[0]
            out = []
            for child in P.children(face):
                if apex not in child.vertex_ids:
                    out.extend((apex,) + s for s in tri(child))
        memo[face.id] = out
        return out

    return tri(P.face_lattice.top)


def volume(P: Polytope) -> Fraction:
    n = P.ambient_dim
    if P.face_lattice.top.dim != n:
        raise DegenerateError("volume needs a full-dimensional polytope", affine_dim=P.face_lattice.top.dim)
    total = Fraction(0)
    for simplex in triangulate(P):
        v0 = P.vertices[simplex[0]]
        total += abs(det([sub(P.vertices[i], v0) for i in simplex[1:]]))
    return total / factorial(n)


def primitive_vertex_rays(P: Polytope, face: Face) -> list:
    return sorted(primitive(v) for v in P.face_vertices(face))
