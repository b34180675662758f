"""Rational polyhedral cones and fans.

Cones carry both descriptions: primitive generators (extreme rays modulo the
lineality space, plus a lattice basis of that space) and facet inequalities
with the equations of the linear span.  Fans are finite sets of pointed cones
sorted by ``(dim, generators)``; a cone's id is its index in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .errors import FanError, NotInSupport, OriginError
from .exactla import (
    LatticeBasis,
    complement_basis,
    dot,
    eq,
    extreme_rays,
    facet_description,
    fm_solve,
    geq,
    gt,
    kernel,
    primitive,
    rank,
    saturate,
    solve,
)
from .exactla.linalg import inverse, matvec, transpose
from .polytope import Polytope, hull


@dataclass(frozen=True)
class Cone:
    generators: tuple  # primitive integral extreme rays (mod lineality), sorted
    lineality: tuple = ()  # saturated lattice basis of the lineality space
    id: Optional[int] = None
    inequalities: tuple = field(default=(), compare=False, repr=False)
    equations: tuple = field(default=(), compare=False, repr=False)

    @property
    def ambient_dim(self) -> int:
        vs = self.generators or self.lineality or self.inequalities or self.equations
        return len(vs[0])

    @property
    def dim(self) -> int:
        vs = list(self.generators) + list(self.lineality)
        return rank(vs) if vs else 0

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def span_basis(self) -> LatticeBasis:
        vs = list(self.generators) + list(self.lineality)
        return saturate(vs, self.ambient_dim)

    def key(self):
        return (self.dim, self.generators, self.lineality)

    def with_id(self, i: int) -> "Cone":
        return Cone(self.generators, self.lineality, i, self.inequalities, self.equations)

    def contains(self, x) -> bool:
        return all(dot(e, x) == 0 for e in self.equations) and all(
            dot(a, x) >= 0 for a in self.inequalities
        )

    def contains_in_relint(self, x) -> bool:
        return all(dot(e, x) == 0 for e in self.equations) and all(
            dot(a, x) > 0 for a in self.inequalities
        )

    def constraints(self) -> list:
        """Fourier-Motzkin constraints describing membership."""
        out = [geq(a) for a in self.inequalities]
        for e in self.equations:
            out.extend(eq(e))
        return out

    def face_ray_sets(self) -> list:
        """Generator subsets of all faces, from the facet incidence.

        Only meaningful for pointed cones, where faces are determined by the
        rays they contain.
        """
        gens = self.generators
        ground = frozenset(gens)
        facet_sets = [frozenset(r for r in gens if dot(a, r) == 0) for a in self.inequalities]
        closed = {ground}
        for g in facet_sets:
            closed |= {c & g for c in closed} | {g}
        return sorted(closed, key=lambda s: (len(s), sorted(s)))

    def faces(self) -> list:
        return [make_cone(sorted(s), n=self.ambient_dim) for s in self.face_ray_sets()]


def make_cone(generators: Iterable[Sequence], lineality: Iterable[Sequence] = (), n: Optional[int] = None) -> Cone:
    """Canonical cone generated by ``generators`` plus the span of ``lineality``.

    Redundant generators are dropped and every ray is made primitive.
    """
    gens = [tuple(Fraction(a) for a in g) for g in generators if any(g)]
    lin = [tuple(Fraction(a) for a in v) for v in lineality if any(v)]
    if n is None:
        if not gens and not lin:
            raise ValueError("ambient dimension required for the zero cone")
        n = len((gens or lin)[0])
    normals, eqs = facet_description(gens, lin, n)
    rays, lin_basis = extreme_rays(normals, eqs, n)
    lin_lattice = saturate([primitive(v) for v in lin_basis], n).vectors if lin_basis else ()
    return Cone(
        generators=tuple(rays),
        lineality=tuple(sorted(lin_lattice)),
        inequalities=tuple(tuple(Fraction(a) for a in v) for v in normals),
        equations=tuple(tuple(Fraction(a) for a in v) for v in eqs),
    )


def dual_cone(sigma: Cone) -> Cone:
    """``{v : <v, u> >= 0 for all u in sigma}``."""
    n = sigma.ambient_dim
    return make_cone(
        [tuple(a) for a in sigma.inequalities],
        [tuple(e) for e in sigma.equations],
        n=n,
    )


class Fan:
    """A finite collection of pointed rational cones in ``R^n``.

    The constructor does not check the fan axioms; see :func:`validate_fan`.
    """

    def __init__(self, n: int, cones: Iterable[Cone], source: Optional[Polytope] = None,
                 cone_to_face: Optional[dict] = None):
        self.dim = n
        unique = {}
        for c in cones:
            unique.setdefault((c.generators, c.lineality), c)
        ordered = sorted(unique.values(), key=Cone.key)
        self.cones = tuple(c.with_id(i) for i, c in enumerate(ordered))
        self._index = {(c.generators, c.lineality): c.id for c in self.cones}
        self.source = source
        self.cone_to_face = dict(cone_to_face or {})
        self.face_relation = self._face_pairs()

    def __repr__(self):
        return f"Fan(dim={self.dim}, cones={len(self.cones)})"

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.dim == other.dim and set(self._index) == set(other._index)

    def __hash__(self):
        return hash((self.dim, frozenset(self._index)))

    def key(self):
        """Hashable canonical form, used to tag data derived from this fan."""
        return (self.dim, tuple((c.generators, c.lineality) for c in self.cones))

    @classmethod
    def generated_by(cls, maximal: Iterable[Iterable[Sequence]], n: int) -> "Fan":
        """The fan of the given cones together with all of their faces."""
        cones = []
        for gens in maximal:
            sigma = make_cone(gens, n=n)
            cones.extend(sigma.faces())
        return cls(n, cones)

    def find(self, generators) -> Optional[Cone]:
        i = self._index.get((tuple(sorted(tuple(g) for g in generators)), ()))
        return None if i is None else self.cones[i]

    def _face_pairs(self) -> tuple:
        pairs = []
        for sigma in self.cones:
            if not sigma.is_pointed:
                continue
            for s in sigma.face_ray_sets():
                tau = self._index.get((tuple(sorted(s)), ()))
                if tau is not None and tau != sigma.id:
                    pairs.append((tau, sigma.id))
        return tuple(sorted(pairs))

    def is_face(self, tau: Cone, sigma: Cone) -> bool:
        return tau.id == sigma.id or (tau.id, sigma.id) in set(self.face_relation)

    def rays(self) -> list:
        return [c for c in self.cones if c.dim == 1]

    def maximal_cones(self) -> list:
        below = {t for t, _ in self.face_relation}
        return [c for c in self.cones if c.id not in below]

    def zero_cone(self) -> Cone:
        return self.cones[0]

    def face_of_cone(self, sigma: Cone):
        if self.source is None:
            raise FanError("fan was not built from a polytope")
        return self.source.faces[self.cone_to_face[sigma.id]]

    def cone_of_face(self, face) -> Cone:
        for cid, fid in self.cone_to_face.items():
            if fid == face.id:
                return self.cones[cid]
        raise KeyError(face.id)


def fan_from_polytope(P: Polytope) -> Fan:
    """The fan of cones over the proper faces of ``P`` (plus the zero cone)."""
    if not P.origin_interior:
        raise OriginError("the origin is not an interior point of the polytope")
    n = P.ambient_dim
    by_gens = {}
    cones = [make_cone([], n=n)]
    for F in P.proper_faces():
        sigma = make_cone([primitive(v) for v in P.face_vertices(F)], n=n)
        cones.append(sigma)
        by_gens[sigma.generators] = F.id
    fan = Fan(n, cones, source=P)
    fan.cone_to_face = {c.id: by_gens[c.generators] for c in fan.cones if c.generators in by_gens}
    return fan


# ---------------------------------------------------------------------------
# fan axioms


@dataclass
class FanReport:
    valid: bool
    violations: list

    def to_json(self):
        return {"valid": self.valid, "violations": list(self.violations)}


def _intersection_is_common_face(sigma: Cone, tau: Cone) -> Optional[str]:
    common = frozenset(sigma.generators) & frozenset(tau.generators)
    sig_faces = set(sigma.face_ray_sets())
    tau_faces = set(tau.face_ray_sets())
    if common not in sig_faces or common not in tau_faces:
        return f"shared rays {sorted(common)} do not form a common face"
    if common == frozenset(sigma.generators) or common == frozenset(tau.generators):
        return None
    # h vanishes exactly on the face cone(common) of sigma and is positive elsewhere on it
    n = sigma.ambient_dim
    h = [Fraction(0)] * n
    for a in sigma.inequalities:
        if all(dot(a, r) == 0 for r in common):
            h = [x + y for x, y in zip(h, a)]
    system = sigma.constraints() + tau.constraints() + [gt(h)]
    witness = fm_solve(system, n)
    if witness is not None:
        return f"intersection contains {list(map(str, witness))} outside the common face"
    return None


def validate_fan(F: Fan) -> FanReport:
    """Check face closure and the pairwise-intersection axiom exactly."""
    problems = []
    for sigma in F.cones:
        if not sigma.is_pointed:
            problems.append(f"cone {sigma.id} is not strongly convex")
    pointed = [c for c in F.cones if c.is_pointed]
    for sigma in pointed:
        for s in sigma.face_ray_sets():
            if F.find(sorted(s)) is None:
                problems.append(f"face {sorted(s)} of cone {sigma.id} is missing")
    for sigma, tau in combinations(pointed, 2):
        msg = _intersection_is_common_face(sigma, tau)
        if msg:
            problems.append(f"cones {sigma.id} and {tau.id}: {msg}")
    return FanReport(not problems, problems)


def _require_valid(F: Fan):
    report = validate_fan(F)
    if not report.valid:
        raise FanError("; ".join(report.violations))


def is_complete(F: Fan) -> bool:
    """Wall-pairing test: every maximal cone is full-dimensional and each of
    its facets lies in exactly two maximal cones."""
    _require_valid(F)
    n = F.dim
    maximal = F.maximal_cones()
    if any(c.dim != n for c in maximal):
        return False
    walls: dict = {}
    for sigma in maximal:
        for s in sigma.face_ray_sets():
            if s and rank(sorted(s)) == n - 1:
                walls.setdefault(s, []).append(sigma.id)
        if n == 1:  # the only wall of a ray is the origin
            walls.setdefault(frozenset(), []).append(sigma.id)
    return bool(walls) and all(len(v) == 2 for v in walls.values())


def locate(F: Fan, u) -> Cone:
    """The unique cone containing ``u`` in its relative interior."""
    u = tuple(Fraction(a) for a in u)
    if all(a == 0 for a in u):
        return F.zero_cone()
    hits = [c for c in F.cones if c.dim > 0 and c.contains_in_relint(u)]
    if not hits:
        raise NotInSupport(f"{u} is not in the support of the fan")
    if len(hits) > 1:
        raise FanError(f"{u} lies in the relative interior of cones {[c.id for c in hits]}")
    return hits[0]


# ---------------------------------------------------------------------------
# Hilbert bases


@dataclass(frozen=True)
class HilbertBasis:
    cone_id: Optional[int]
    elements: tuple
    lineality_generators: tuple

    def all_generators(self) -> list:
        return graded_lex(list(self.elements) + list(self.lineality_generators))


def graded_lex(vectors) -> list:
    return sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(abs(a) for a in v), v))


def _parallelepiped_points(B: list) -> list:
    """Lattice points of ``{sum l_i b_i : 0 <= l_i < 1}`` for a basis ``B`` of Q^d."""
    from .exactla import smith_normal_form

    d = len(B)
    cols = [list(r) for r in transpose(B)]  # columns are the b_i
    U, S, _ = smith_normal_form(cols)
    Uinv = inverse(U)
    diag = [S[i][i] for i in range(d)]
    Binv_cols = inverse(cols)
    points = []
    for k in product(*(range(s) for s in diag)):
        x = matvec(Uinv, k)
        lam = matvec(Binv_cols, x)
        lam = [a - (a.numerator // a.denominator) for a in lam]
        y = matvec(cols, lam)
        points.append(tuple(int(a) for a in y))
    return points


def _pointed_full_hilbert(rays: list, cone: Cone) -> list:
    d = len(rays[0])
    candidates = set(rays)
    for B in combinations(rays, d):
        if rank(list(B)) == d:
            candidates.update(p for p in _parallelepiped_points(list(B)) if any(p))
    cands = sorted(candidates)
    basis = []
    for x in cands:
        reducible = False
        for y in cands:
            if y == x:
                continue
            diff = tuple(a - b for a, b in zip(x, y))
            if any(diff) and cone.contains(diff):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return basis


def hilbert_basis(C: Cone) -> HilbertBasis:
    """Minimal generating set of the semigroup ``C ∩ Z^n``.

    The lineality lattice is split off as ``±`` basis vectors; the pointed
    remainder is handled in lattice coordinates of its own span, where the
    candidates are the generators plus the lattice points of the fundamental
    parallelepipeds of all linearly independent generator subsets.
    """
    n = C.ambient_dim
    lin = [tuple(v) for v in C.lineality]
    lineality_gens = graded_lex([v for l in lin for v in (l, tuple(-a for a in l))])
    if not C.generators:
        return HilbertBasis(C.id, (), tuple(lineality_gens))

    # quotient by the lineality lattice: Z^n = L ⊕ W
    W = list(complement_basis(lin, n).vectors) if lin else [tuple(int(i == j) for j in range(n)) for i in range(n)]
    M = [tuple(v) for v in lin] + W
    Mt = transpose(M)

    def quotient(x):
        coords = solve(Mt, x)
        return tuple(int(a) for a in coords[len(lin):])

    def lift(q):
        return tuple(sum(c * w[i] for c, w in zip(q, W)) for i in range(n))

    qgens = [primitive(quotient(g)) for g in C.generators]
    qgens = list(make_cone(qgens).generators)
    m = len(W)
    # restrict to the saturated span of the pointed quotient cone
    span = list(saturate(qgens, m).vectors)
    St = transpose(span)

    def to_span(x):
        return tuple(int(a) for a in solve(St, x))

    def from_span(y):
        return tuple(sum(c * s[i] for c, s in zip(y, span)) for i in range(m))

    rays = [to_span(g) for g in qgens]
    inner = make_cone(rays)
    elements = [lift(from_span(y)) for y in _pointed_full_hilbert(list(inner.generators), inner)]
    return HilbertBasis(C.id, tuple(graded_lex(elements)), tuple(lineality_gens))


# ---------------------------------------------------------------------------
# polytopality


@dataclass
class PolytopalReport:
    coplanarity_feasible: bool
    strictly_convex_feasible: bool
    heights: Optional[dict] = None  # ray generator -> height, strict witness if any
    coplanar_heights: Optional[dict] = None
    witness: Optional[Polytope] = None
    witness_fan_matches: Optional[bool] = None


def is_polytopal(F: Fan) -> PolytopalReport:
    """Decide whether points on the rays can be chosen so that each maximal
    cone's points are coplanar (and, additionally, form a convex polytope).

    Heights enter through their reciprocals ``mu_r = 1 / lambda_r``: on each
    maximal cone ``sigma`` a linear form ``m_sigma`` with ``<m_sigma, r> = mu_r``
    must exist, and convexity across a wall asks ``<m_sigma, r'> < mu_r'`` for
    rays ``r'`` of the neighbour.  Everything is homogeneous in ``mu``, so
    strict inequalities are replaced by margins of 1.
    """
    _require_valid(F)
    if not is_complete(F):
        raise FanError("polytopality is only decided for complete fans")
    n = F.dim
    rays = [c.generators[0] for c in F.rays()]
    index = {r: i for i, r in enumerate(rays)}
    k = len(rays)
    maximal = F.maximal_cones()

    forms = {}  # cone id -> matrix turning mu into m_sigma (n x k)
    equations = []
    for sigma in maximal:
        gens = list(sigma.generators)
        basis = next(B for B in combinations(gens, n) if rank(list(B)) == n)
        Binv = inverse(basis)
        form = [[Fraction(0)] * k for _ in range(n)]
        for j, r in enumerate(basis):
            for i in range(n):
                form[i][index[r]] += Binv[i][j]
        forms[sigma.id] = form
        for r in gens:
            if r in basis:
                continue
            row = [sum(form[i][c] * r[i] for i in range(n)) for c in range(k)]
            row[index[r]] -= 1
            equations.append(row)

    def value_row(sigma_id, r):
        form = forms[sigma_id]
        return [sum(form[i][c] * r[i] for i in range(n)) for c in range(k)]

    walls: dict = {}
    for sigma in maximal:
        for s in sigma.face_ray_sets():
            if s and rank(sorted(s)) == n - 1:
                walls.setdefault(s, []).append(sigma)
    crease_rows = []
    for pair in walls.values():
        for a, b in (pair, pair[::-1]):
            for r in b.generators:
                if r not in a.generators:
                    row = [-x for x in value_row(a.id, r)]
                    row[index[r]] += 1
                    crease_rows.append(row)

    ker = kernel(equations, ncols=k) if equations else kernel([], ncols=k)
    # mu = sum_j t_j ker_j ; rewrite each row . mu >= 1 in terms of t
    def in_t(row):
        return tuple(sum(Fraction(row[c]) * v[c] for c in range(k)) for v in ker)

    positivity = [geq(in_t([int(c == i) for c in range(k)]), 1) for i in range(k)]
    crease = [geq(in_t(r), 1) for r in crease_rows]

    def heights_from(t):
        mu = [sum(tj * v[c] for tj, v in zip(t, ker)) for c in range(k)]
        top = max(mu)
        return {rays[c]: top / mu[c] for c in range(k)}

    report = PolytopalReport(False, False)
    if not ker:
        return report
    t = fm_solve(positivity, len(ker))
    if t is None:
        return report
    report.coplanarity_feasible = True
    report.coplanar_heights = heights_from(t)
    t = fm_solve(positivity + crease, len(ker))
    if t is None:
        return report
    report.strictly_convex_feasible = True
    report.heights = heights_from(t)
    report.witness = hull([tuple(h * a for a in r) for r, h in report.heights.items()])
    report.witness_fan_matches = fan_from_polytope(report.witness) == F
    return report
