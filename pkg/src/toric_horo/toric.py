"""Combinatorial toric-variety layer.

Affine charts come from Hilbert bases of dual cones.  Boundary points of the
compactified torus are stored as a cone together with a canonical coset
representative: the component orthogonal to the span of the cone for the
real part, and quotient-torus coordinates reduced to [0, 1) for the
imaginary part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import ChartError, FanMismatch, NotDivergent
from .exactla import complement_basis, dot, in_span, orthogonal_component, qvec, saturate, solve
from .exactla.linalg import add, is_zero, transpose
from .fan import Cone, Fan, dual_cone, hilbert_basis, locate


@dataclass(frozen=True)
class AffineChart:
    cone_id: Optional[int]
    semigroup_generators: tuple

    @property
    def embedding_dim(self) -> int:
        return len(self.semigroup_generators)

    def to_json(self):
        return {"cone": self.cone_id, "generators": [list(g) for g in self.semigroup_generators]}


@dataclass(frozen=True)
class DistinguishedPoint:
    cone_id: Optional[int]
    coordinates: tuple


@dataclass(frozen=True)
class PathSpec:
    """The affine path ``t*u + c`` (plus ``i*y0`` in the complex model)."""

    direction: tuple
    offset: tuple
    imag: Optional[tuple] = None

    @classmethod
    def of(cls, u, c=None, y0=None):
        u = qvec(u)
        c = qvec(c) if c is not None else (Fraction(0),) * len(u)
        return cls(u, c, qvec(y0) if y0 is not None else None)

    def at(self, t) -> tuple:
        t = Fraction(t)
        return tuple(t * a + b for a, b in zip(self.direction, self.offset))

    def shifted(self, shift, imag_shift=None) -> "PathSpec":
        imag = self.imag
        if imag_shift is not None:
            imag = add(imag if imag is not None else (Fraction(0),) * len(shift), imag_shift)
        return PathSpec(self.direction, add(self.offset, shift), imag)


@dataclass(frozen=True)
class BoundaryPoint:
    fan_key: tuple = field(repr=False)
    cone_id: int
    real_coset: tuple
    torus_coset: Optional[tuple] = None

    def to_json(self):
        from .serialize import qvec_to_json

        out = {"cone": self.cone_id, "real_coset": qvec_to_json(self.real_coset)}
        if self.torus_coset is not None:
            out["torus_coset"] = qvec_to_json(self.torus_coset)
        return out


class OrbitRow(NamedTuple):
    cone_id: int
    orbit_dim: int
    dense: bool


def affine_chart(sigma: Cone) -> AffineChart:
    hb = hilbert_basis(dual_cone(sigma))
    return AffineChart(sigma.id, tuple(hb.all_generators()))


def distinguished_point(sigma: Cone, chart: AffineChart) -> DistinguishedPoint:
    """0/1 coordinates: 1 where the character vanishes on ``sigma``."""
    coords = []
    for m in chart.semigroup_generators:
        values = [dot(m, r) for r in sigma.generators]
        if any(v < 0 for v in values):
            raise ChartError(f"generator {m} is negative on cone {sigma.id}")
        coords.append(int(all(v == 0 for v in values)))
    return DistinguishedPoint(sigma.id, tuple(coords))


def orbit_table(F: Fan) -> list:
    return [OrbitRow(c.id, F.dim - c.dim, c.dim == 0) for c in F.cones]


def orbit_closure_relation(F: Fan) -> list:
    """Pairs ``(s1, s2)`` with the orbit of ``s1`` inside the closure of the
    orbit of ``s2``, i.e. ``s2`` a proper face of ``s1``."""
    return sorted((big, small) for small, big in F.face_relation)


def _quotient_frame(sigma: Cone, n: int):
    span = [tuple(g) for g in sigma.generators]
    lattice = list(saturate(span, n).vectors) if span else []
    comp = list(complement_basis(lattice, n).vectors)
    return lattice, comp


def torus_coordinates(sigma: Cone, y, n: int) -> tuple:
    """Coordinates of ``y`` in ``R^n / (Z^n + V(sigma))``, reduced to [0, 1)."""
    lattice, comp = _quotient_frame(sigma, n)
    coords = solve(transpose(lattice + comp), tuple(y))
    tail = coords[len(lattice):]
    return tuple(a - (a.numerator // a.denominator) for a in tail)


def _span(sigma: Cone) -> list:
    return [tuple(Fraction(a) for a in g) for g in sigma.generators]


def classify_limit_real(F: Fan, path: PathSpec) -> BoundaryPoint:
    if is_zero(path.direction):
        raise NotDivergent("direction is zero; the path stays bounded")
    sigma = locate(F, path.direction)
    coset = orthogonal_component(path.offset, _span(sigma))
    return BoundaryPoint(F.key(), sigma.id, coset)


def classify_limit_complex(F: Fan, path: PathSpec) -> BoundaryPoint:
    bp = classify_limit_real(F, path)
    sigma = F.cones[bp.cone_id]
    imag = path.imag if path.imag is not None else (Fraction(0),) * F.dim
    return BoundaryPoint(bp.fan_key, bp.cone_id, bp.real_coset, torus_coordinates(sigma, imag, F.dim))


def boundary_point_eq(a: BoundaryPoint, b: BoundaryPoint) -> bool:
    if a.fan_key != b.fan_key:
        raise FanMismatch("boundary points belong to different fans")
    if a.cone_id != b.cone_id:
        return False
    diff = tuple(x - y for x, y in zip(a.real_coset, b.real_coset))
    # fan_key lists (generators, lineality) in cone-id order
    span = [tuple(Fraction(x) for x in g) for g in a.fan_key[1][a.cone_id][0]]
    if not in_span(diff, span):
        return False
    return a.torus_coset == b.torus_coset


def act(F: Fan, bp: BoundaryPoint, shift, imag_shift=None) -> BoundaryPoint:
    """Translate a boundary point by ``shift + i*imag_shift``."""
    sigma = F.cones[bp.cone_id]
    real = orthogonal_component(add(bp.real_coset, qvec(shift)), _span(sigma))
    torus = bp.torus_coset
    if torus is not None and imag_shift is not None:
        delta = torus_coordinates(sigma, qvec(imag_shift), F.dim)
        torus = tuple((x + d) - ((x + d).numerator // (x + d).denominator) for x, d in zip(torus, delta))
    return BoundaryPoint(bp.fan_key, bp.cone_id, real, torus)


def translation_equivariance_check(F: Fan, path: PathSpec, shift, imag_shift=None) -> bool:
    """Limit of the shifted path equals the shifted limit."""
    complex_model = path.imag is not None or imag_shift is not None
    classify = classify_limit_complex if complex_model else classify_limit_real
    if complex_model and path.imag is None:
        path = PathSpec(path.direction, path.offset, (Fraction(0),) * F.dim)
    lhs = classify(F, path.shifted(qvec(shift), qvec(imag_shift) if imag_shift is not None else None))
    rhs = act(F, classify(F, path), shift, imag_shift)
    return boundary_point_eq(lhs, rhs)
