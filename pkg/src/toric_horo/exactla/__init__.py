"""Exact rational linear algebra, lattice algebra and linear feasibility."""

from .fourier_motzkin import Constraint, eq, fm_feasible, fm_solve, geq, gt
from .lattice import (
    LatticeBasis,
    complement_basis,
    is_smith_normal_form,
    saturate,
    saturation_and_complement,
    smith_normal_form,
)
from .linalg import (
    QMatrix,
    QVector,
    det,
    dot,
    format_rational,
    identity,
    in_span,
    kernel,
    matmul,
    matvec,
    orthogonal_component,
    parse_rational,
    primitive,
    qmat,
    qvec,
    rank,
    rank_and_solve,
    row_basis,
    solve,
)
from .polyhedral import extreme_rays, facet_description
from .simplex import nonnegative_solution

__all__ = [
    "Constraint",
    "LatticeBasis",
    "QMatrix",
    "QVector",
    "complement_basis",
    "det",
    "dot",
    "eq",
    "extreme_rays",
    "facet_description",
    "fm_feasible",
    "fm_solve",
    "format_rational",
    "geq",
    "gt",
    "identity",
    "in_span",
    "is_smith_normal_form",
    "kernel",
    "matmul",
    "matvec",
    "nonnegative_solution",
    "orthogonal_component",
    "parse_rational",
    "primitive",
    "qmat",
    "qvec",
    "rank",
    "rank_and_solve",
    "row_basis",
    "saturate",
    "saturation_and_complement",
    "smith_normal_form",
    "solve",
]
