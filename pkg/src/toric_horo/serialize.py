"""JSON encodings.  Every rational is written as a ``"p/q"`` (or ``"p"``) string."""

from __future__ import annotations

import json

from .exactla import format_rational, parse_rational
from .fan import Fan, make_cone
from .polytope import Polytope, hull


def rational_to_json(q) -> str:
    return format_rational(q)


def qvec_to_json(v) -> list:
    return [format_rational(a) for a in v]


def qvec_from_json(v) -> tuple:
    return tuple(parse_rational(a) for a in v)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def polytope_to_json(P: Polytope) -> dict:
    return {
        "dim": P.ambient_dim,
        "vertices": [qvec_to_json(v) for v in P.vertices],
        "facets": [
            {"normal": qvec_to_json(a), "offset": rational_to_json(b)} for a, b in P.facets
        ],
        "faces": [
            {"id": f.id, "dim": f.dim, "vertex_ids": list(f.vertex_ids)} for f in P.faces
        ],
        "incidence": [list(p) for p in P.face_lattice.incidence],
    }


def polytope_from_json(data: dict) -> Polytope:
    if "vertices" not in data:
        raise ValueError("polytope JSON needs a 'vertices' list")
    P = hull(qvec_from_json(v) for v in data["vertices"])
    if "dim" in data and int(data["dim"]) != P.ambient_dim:
        raise ValueError(f"declared dim {data['dim']} but vertices have length {P.ambient_dim}")
    return P


def fan_to_json(F: Fan) -> dict:
    parents: dict = {c.id: [] for c in F.cones}
    for small, big in F.face_relation:
        parents[small].append(big)
    return {
        "dim": F.dim,
        "cones": [
            {"id": c.id, "rays": [list(r) for r in c.generators], "faces_of": sorted(parents[c.id])}
            for c in F.cones
        ],
    }


def fan_from_json(data: dict, close: bool = False) -> Fan:
    """Parse the fan format.  With ``close`` the listed cones are completed
    by all their faces; otherwise the cones are taken literally so that
    validation can report missing faces."""
    n = int(data["dim"])
    ray_lists = [[_integral_ray(r) for r in c["rays"]] for c in data["cones"]]
    if close:
        return Fan.generated_by(ray_lists, n)
    return Fan(n, [make_cone(rs, n=n) for rs in ray_lists])


def _integral_ray(r) -> tuple:
    q = qvec_from_json(r)
    if any(a.denominator != 1 for a in q):
        raise ValueError(f"fan rays must be integral, got {[format_rational(a) for a in q]}")
    return tuple(int(a) for a in q)


def is_fan_json(data: dict) -> bool:
    return "cones" in data


def heights_to_json(heights) -> list:
    if heights is None:
        return None
    return [{"ray": list(r), "height": rational_to_json(h)} for r, h in sorted(heights.items())]


def load(text: str):
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("top-level JSON value must be an object")
    return data

