"""Polyhedral asymmetric norms and their horofunctions.

The norm with unit ball ``P`` is evaluated from the facets of ``P``; the
pseudo-norm ``|x|_C = -min_{q in C} <q, x>`` of a vertex set ``C`` is the
other route to the same number when ``C`` is the polar of ``P``.
Horofunctions of the norm are the functions ``h_{E,p}(y) = |p - y|_E - |p|_E``
for faces ``E`` of the polar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import EmptyError, NotDivergent, OriginError
from .exactla import dot, nonnegative_solution, orthogonal_component, qvec
from .exactla.linalg import is_zero, sub
from .fan import Fan, fan_from_polytope, locate
from .polytope import Face, Polytope, dual_face
from .toric import PathSpec

DEFAULT_SCHEDULE = tuple(Fraction(2) ** k for k in range(17))


@lru_cache(maxsize=64)
def polytope_fan(P: Polytope) -> Fan:
    return fan_from_polytope(P)


def _require_origin(P: Polytope):
    if not P.origin_interior:
        raise OriginError("the norm needs the origin in the interior of its unit ball")


def gauge(P: Polytope, x) -> Fraction:
    """Minkowski functional ``inf{lam > 0 : x in lam P}`` from the facets."""
    _require_origin(P)
    x = qvec(x)
    return max([Fraction(0)] + [dot(a, x) / b for a, b in P.facets])


def dist(P: Polytope, x, y) -> Fraction:
    """Asymmetric distance ``||y - x||_P``."""
    return gauge(P, sub(qvec(y), qvec(x)))


class PolyNorm:
    """Convenience wrapper: ``norm(x)`` and ``norm.dist(x, y)``."""

    def __init__(self, P: Polytope):
        _require_origin(P)
        self.P = P

    def __call__(self, x) -> Fraction:
        return gauge(self.P, x)

    def dist(self, x, y) -> Fraction:
        return dist(self.P, x, y)


def pseudo_norm(C: Sequence[Sequence], x) -> Fraction:
    """``-inf_{q in conv C} <q, x>``, attained at a vertex."""
    if not C:
        raise EmptyError("pseudo-norm of an empty set")
    x = qvec(x)
    return max(-dot(q, x) for q in C)


def gauge_by_bisection(P: Polytope, x, width=Fraction(1, 10**10)):
    """Bracket the gauge using only vertex membership.

    ``x in lam P`` is decided by an exact phase-one LP in the convex
    combination weights of the vertices; the bracket ``[lo, hi]`` is halved
    until narrower than ``width``.  No facet data is used.
    """
    x = qvec(x)
    if is_zero(x):
        return Fraction(0), Fraction(0)
    verts = P.vertices
    n = P.ambient_dim

    def member(lam):
        A = [[v[i] for v in verts] for i in range(n)] + [[Fraction(1)] * len(verts)]
        b = [a / lam for a in x] + [Fraction(1)]
        return nonnegative_solution(A, b) is not None

    lo, hi = Fraction(0), Fraction(1)
    while not member(hi):
        lo, hi = hi, hi * 2
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if member(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


@dataclass(frozen=True)
class Horofunction:
    polytope: Polytope = field(repr=False)
    face: Face  # face E of the polar
    dual_of: Face  # face F of P with E = F°
    base_coset: tuple

    @property
    def vertices(self) -> list:
        return self.polytope.polar.face_vertices(self.face)

    def __call__(self, y) -> Fraction:
        return horofunction_value(self, y)

    def to_json(self):
        from .serialize import qvec_to_json

        return {
            "dual_face": self.face.id,
            "face": self.dual_of.id,
            "base_coset": qvec_to_json(self.base_coset),
        }


def span_of_face(P: Polytope, F: Face) -> list:
    return [tuple(v) for v in P.face_vertices(F)]


def make_horofunction(P: Polytope, F: Face, p) -> Horofunction:
    """``h_{F°, p}`` with ``p`` replaced by its component orthogonal to ``V(F)``."""
    E = dual_face(P, F)
    base = orthogonal_component(qvec(p), span_of_face(P, F))
    return Horofunction(P, E, F, base)


def horofunction_value(h: Horofunction, y) -> Fraction:
    E = h.vertices
    p = h.base_coset
    return pseudo_norm(E, sub(p, qvec(y))) - pseudo_norm(E, p)


def classify_limit_horo(P: Polytope, path: PathSpec) -> Horofunction:
    """Horofunction limit of ``t*u + c``: the face ``F`` with ``u`` in the
    relative interior of its cone, and ``c`` modulo ``V(F)``."""
    _require_origin(P)
    if is_zero(path.direction):
        raise NotDivergent("direction is zero; the path stays bounded")
    fan = polytope_fan(P)
    sigma = locate(fan, path.direction)
    F = fan.face_of_cone(sigma)
    return make_horofunction(P, F, path.offset)


@dataclass
class ConvergenceReport:
    horofunction: Horofunction
    schedule: tuple
    t0_per_sample: dict  # sample index -> first scheduled t from which Delta == h, or None
    limits: dict  # sample index -> h(z)

    @property
    def stabilized(self) -> bool:
        return all(t is not None for t in self.t0_per_sample.values())

    @property
    def t0(self) -> Optional[Fraction]:
        if not self.stabilized:
            return None
        return max(self.t0_per_sample.values(), default=self.schedule[0])

    def to_json(self):
        from .serialize import rational_to_json

        return {
            "stabilized": self.stabilized,
            "t0": rational_to_json(self.t0) if self.t0 is not None else None,
            "t0_per_sample": {
                str(k): (rational_to_json(v) if v is not None else None)
                for k, v in self.t0_per_sample.items()
            },
            "horofunction": self.horofunction.to_json(),
        }


def normalized_distance(P: Polytope, z, x) -> Fraction:
    """``d(z, x) - d(0, x)``: the image of ``x`` under the horofunction embedding
    with base point the origin, evaluated at ``z``."""
    return dist(P, z, x) - dist(P, (0,) * P.ambient_dim, x)


def verify_convergence(P: Polytope, path: PathSpec, z_samples, t_schedule=None) -> ConvergenceReport:
    """Track ``d(z, x(t)) - d(0, x(t))`` along the schedule and report, per
    sample, the first scheduled time after which it equals the classified
    horofunction exactly."""
    h = classify_limit_horo(P, path)
    schedule = tuple(sorted(Fraction(t) for t in (t_schedule or DEFAULT_SCHEDULE)))
    points = [path.at(t) for t in schedule]
    t0s, limits = {}, {}
    for k, z in enumerate(z_samples):
        z = qvec(z)
        target = h(z)
        limits[k] = target
        first = None
        for t, x in zip(schedule, points):
            if normalized_distance(P, z, x) == target:
                if first is None:
                    first = t
            else:
                first = None
        t0s[k] = first
    return ConvergenceReport(h, schedule, t0s, limits)
