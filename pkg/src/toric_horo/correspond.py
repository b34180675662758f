"""Combinatorial certificate for the horofunction / toric correspondence.

Two cell complexes are compared.  The boundary of the horofunction
compactification has one cell ``R^n / V(F)`` per proper face ``F`` of the unit
ball, of dimension ``n - 1 - dim F``; the moment-map image is the polar, with
one open cell per proper face.  The correspondence ``F -> F°`` must be a
dimension-preserving isomorphism of closure posets, and the two limit
classifiers (horofunctions and the toric model) must name matching strata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import primitive
from .horo import classify_limit_horo, polytope_fan
from .polytope import Polytope, dual_face, _require_origin
from .serialize import qvec_to_json
from .toric import PathSpec, boundary_point_eq, classify_limit_real


@dataclass(frozen=True)
class CellComplex:
    cells: tuple  # (id, dim, label)
    closure_relation: tuple  # (a, b): cell a lies in the closure of cell b, a != b

    def graded_counts(self) -> dict:
        counts: dict = {}
        for _, d, _ in self.cells:
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items()))

    def dims(self) -> dict:
        return {c: d for c, d, _ in self.cells}


def boundary_complex(P: Polytope) -> CellComplex:
    _require_origin(P)
    n = P.ambient_dim
    faces = P.proper_faces()
    cells = tuple((F.id, n - 1 - F.dim, f"R^{n}/V(F{F.id})") for F in faces)
    closure = tuple(
        (F1.id, F2.id)
        for F1 in faces
        for F2 in faces
        if F1.id != F2.id and P.is_subface(F2, F1)
    )
    return CellComplex(cells, closure)


def moment_image_complex(P: Polytope) -> CellComplex:
    _require_origin(P)
    Q = P.polar
    faces = Q.proper_faces()
    cells = tuple((E.id, E.dim, f"relint E{E.id}") for E in faces)
    closure = tuple(
        (E1.id, E2.id)
        for E1 in faces
        for E2 in faces
        if E1.id != E2.id and Q.is_subface(E1, E2)
    )
    return CellComplex(cells, closure)


def sample_direction(P: Polytope, F) -> tuple:
    """Barycentre of the primitive generators of the cone over ``F``."""
    gens = [primitive(v) for v in P.face_vertices(F)]
    k = len(gens)
    return tuple(Fraction(sum(g[i] for g in gens), k) for i in range(P.ambient_dim))


@dataclass
class CorrespondenceReport:
    bijection: dict  # face id of P -> face id of the polar
    bijective: bool
    dim_checks: dict  # face id -> bool
    incidence_check: bool
    classifier_checks: dict  # face id -> bool
    moment_image_match: bool
    cell_counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            self.bijective
            and all(self.dim_checks.values())
            and self.incidence_check
            and all(self.classifier_checks.values())
            and self.moment_image_match
        )

    def to_json(self):
        return {
            "passed": self.passed,
            "checks": {
                "bijection": self.bijective,
                "dimensions": all(self.dim_checks.values()),
                "incidence": self.incidence_check,
                "classifier_coherence": all(self.classifier_checks.values()),
                "moment_image": self.moment_image_match,
            },
            "bijection": [
                {"face": f, "dual_face": e, "dim_ok": self.dim_checks[f], "classified_ok": self.classifier_checks[f]}
                for f, e in sorted(self.bijection.items())
            ],
            "cell_counts": {k: {str(d): c for d, c in v.items()} for k, v in self.cell_counts.items()},
        }


def verify_correspondence(P: Polytope, offset=None) -> CorrespondenceReport:
    """Run the four checks; failures are recorded in the report, never raised."""
    _require_origin(P)
    n = P.ambient_dim
    Q = P.polar
    faces = P.proper_faces()
    bij = {F.id: dual_face(P, F).id for F in faces}
    targets = {E.id for E in Q.proper_faces()}
    bijective = len(set(bij.values())) == len(bij) and set(bij.values()) == targets

    bdry = boundary_complex(P)
    moment = moment_image_complex(P)
    bdims, mdims = bdry.dims(), moment.dims()
    dim_checks = {f: bdims[f] == mdims[e] for f, e in bij.items()}
    mapped = {(bij[a], bij[b]) for a, b in bdry.closure_relation}
    incidence = mapped == set(moment.closure_relation)

    fan = polytope_fan(P)
    c = tuple(Fraction(a) for a in offset) if offset is not None else (Fraction(0),) * n
    classified = {}
    for F in faces:
        path = PathSpec(sample_direction(P, F), c)
        h = classify_limit_horo(P, path)
        bp = classify_limit_real(fan, path)
        sigma = fan.cone_of_face(F)
        same_coset = boundary_point_eq(
            bp, bp.__class__(bp.fan_key, sigma.id, h.base_coset, None)
        )
        classified[F.id] = h.face.id == bij[F.id] and bp.cone_id == sigma.id and same_coset

    moment_match = (
        len(moment.cells) == len(targets)
        and bdry.graded_counts() == moment.graded_counts()
    )
    counts = {"boundary": bdry.graded_counts(), "moment_image": moment.graded_counts()}
    return CorrespondenceReport(bij, bijective, dim_checks, incidence, classified, moment_match, counts)


def bijection_table(P: Polytope) -> list:
    rep = verify_correspondence(P)
    Q = P.polar
    return [
        {
            "face": f,
            "face_vertices": [qvec_to_json(v) for v in P.face_vertices(P.faces[f])],
            "dual_face": e,
            "dual_vertices": [qvec_to_json(v) for v in Q.face_vertices(Q.faces[e])],
        }
        for f, e in sorted(rep.bijection.items())
    ]
