"""Built-in fixtures: small polytopes with the origin inside, and Fulton's
non-polytopal complete fan."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import OriginError
from .fan import Fan
from .polytope import Polytope, hull

_half = Fraction(1, 2)

POLYTOPE_VERTICES = {
    "square": [(1, 1), (1, -1), (-1, 1), (-1, -1)],
    "cross2": [(1, 0), (-1, 0), (0, 1), (0, -1)],
    "asymquad": [(2, 0), (0, 1), (-1, 0), (0, -1)],
    "simplex2": [(1, 0), (0, 1), (-_half, -_half)],
    "cube3": list(product((-1, 1), repeat=3)),
    "octa3": [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
    "pyramid3": [(1, 1, -1), (1, -1, -1), (-1, 1, -1), (-1, -1, -1), (0, 0, 2)],
}

FULTON_RAYS = [
    (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1),
    (1, -1, 1), (1, -1, -1), (1, 1, -1), (1, 2, 3),
]


def polytope(name: str) -> Polytope:
    try:
        verts = POLYTOPE_VERTICES[name]
    except KeyError:
        raise KeyError(f"unknown corpus polytope {name!r}") from None
    P = hull(verts)
    if not P.origin_interior:
        raise OriginError(f"corpus polytope {name} does not contain the origin in its interior")
    return P


def fulton_fan() -> Fan:
    """Six cones over the facets of a combinatorial cube whose vertex
    ``(1, 1, 1)`` has been moved to ``(1, 2, 3)``."""

    def cube_sign(r):
        return (1, 1, 1) if r == (1, 2, 3) else r

    maximal = [
        [r for r in FULTON_RAYS if cube_sign(r)[axis] == side]
        for axis in range(3)
        for side in (1, -1)
    ]
    return Fan.generated_by(maximal, 3)


def names() -> list:
    return list(POLYTOPE_VERTICES)


def corpus() -> dict:
    """Name -> fixture; polytopes plus the ``fulton`` fan."""
    out = {name: polytope(name) for name in POLYTOPE_VERTICES}
    out["fulton"] = fulton_fan()
    return out
