"""``toric-horo`` command line.

Every command reads a polytope or fan (a JSON file, or the name of a
built-in fixture) and writes one JSON report; ``render`` writes SVG.
Exit status: 0 on success, 1 when a check fails, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import corpus
from .correspond import bijection_table, verify_correspondence
from .errors import ToricHoroError
from .exactla import parse_rational
from .fan import Fan, dual_cone, fan_from_polytope, hilbert_basis, is_complete, is_polytopal, validate_fan
from .horo import classify_limit_horo, gauge, gauge_by_bisection, pseudo_norm, verify_convergence
from .polytope import Polytope, has_primitive_vertex, normalize, volume
from .render import render_svg
from .sampling import random_qvecs
from .serialize import (
    dumps,
    fan_from_json,
    fan_to_json,
    heights_to_json,
    is_fan_json,
    load,
    polytope_from_json,
    polytope_to_json,
    qvec_to_json,
    rational_to_json,
)
from .toric import PathSpec, affine_chart, classify_limit_complex, classify_limit_real, distinguished_point, orbit_table

COMMANDS = ("analyze", "polar", "fan", "charts", "hilbert", "norm", "horo", "classify", "verify", "polytopal", "render")


class UsageError(Exception):
    pass


@dataclass
class Job:
    command: str
    input_path: str
    output_path: Optional[str] = None
    options: dict = field(default_factory=dict)


def _vector(text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(parse_rational(p) for p in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational vector {text!r}: {exc}") from None


def _load_input(source: str):
    path = Path(source)
    if path.exists():
        try:
            data = load(path.read_text())
        except ValueError as exc:
            raise UsageError(f"{source}: malformed JSON ({exc})") from None
        try:
            if is_fan_json(data):
                return fan_from_json(data, close=False)
            return polytope_from_json(data)
        except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
            raise UsageError(f"{source}: {exc}") from None
    name = source.removeprefix("corpus:")
    if name == "fulton":
        return corpus.fulton_fan()
    if name in corpus.POLYTOPE_VERTICES:
        return corpus.polytope(name)
    raise UsageError(f"{source}: no such file or corpus fixture")


def _need_polytope(obj) -> Polytope:
    if not isinstance(obj, Polytope):
        raise UsageError("this command needs a polytope input")
    return obj


def _fan_of(obj) -> Fan:
    return obj if isinstance(obj, Fan) else fan_from_polytope(obj)


def _path(opts, n):
    u = opts.get("u")
    if u is None:
        raise UsageError("--u is required")
    c = opts.get("c") or (0,) * n
    if len(u) != n or len(c) != n:
        raise UsageError(f"--u/--c must have {n} entries")
    y0 = opts.get("y0")
    return PathSpec.of(u, c, y0)


def _cmd_analyze(obj, opts):
    P = _need_polytope(obj)
    lam, Pn = normalize(P)
    out = polytope_to_json(P)
    out.update(
        {
            "origin_interior": P.origin_interior,
            "f_vector": P.f_vector(),
            "volume": rational_to_json(volume(P)),
            "polar_vertices": [qvec_to_json(v) for v in P.polar.vertices],
            "normalization": {
                "scale": rational_to_json(lam),
                "vertices": [qvec_to_json(v) for v in Pn.vertices],
                "has_primitive_vertex": has_primitive_vertex(Pn),
            },
            "duality": bijection_table(P),
        }
    )
    return out, 0


def _cmd_polar(obj, opts):
    return polytope_to_json(_need_polytope(obj).polar), 0


def _cmd_fan(obj, opts):
    F = _fan_of(obj)
    report = validate_fan(F)
    out = fan_to_json(F)
    out["validation"] = report.to_json()
    out["complete"] = is_complete(F) if report.valid else None
    if F.source is not None:
        out["cone_to_face"] = {str(k): v for k, v in sorted(F.cone_to_face.items())}
    return out, 0 if report.valid else 1


def _cmd_charts(obj, opts):
    F = _fan_of(obj)
    rows = []
    for sigma in F.cones:
        chart = affine_chart(sigma)
        entry = chart.to_json()
        entry["embedding_dim"] = chart.embedding_dim
        entry["distinguished_point"] = list(distinguished_point(sigma, chart).coordinates)
        rows.append(entry)
    orbits = [{"cone": r.cone_id, "orbit_dim": r.orbit_dim, "dense": r.dense} for r in orbit_table(F)]
    return {"charts": rows, "orbits": orbits}, 0


def _cmd_hilbert(obj, opts):
    F = _fan_of(obj)
    rows = []
    for sigma in F.cones:
        hb = hilbert_basis(dual_cone(sigma))
        rows.append(
            {
                "cone": sigma.id,
                "dual_elements": [list(v) for v in hb.elements],
                "dual_lineality": [list(v) for v in hb.lineality_generators],
                "cone_elements": [list(v) for v in hilbert_basis(sigma).elements],
            }
        )
    return {"hilbert_bases": rows}, 0


def _cmd_norm(obj, opts):
    P = _need_polytope(obj)
    n = P.ambient_dim
    seed = opts["seed"]
    points = [opts["x"]] if opts.get("x") else random_qvecs(seed, opts["samples"], n)
    polar_vertices = P.polar.vertices
    rows, agree = [], True
    for k, x in enumerate(points):
        g = gauge(P, x)
        pn = pseudo_norm(polar_vertices, x)
        row = {"x": qvec_to_json(x), "gauge": rational_to_json(g), "pseudo_norm": rational_to_json(pn)}
        ok = g == pn
        if k < opts["oracle_samples"]:
            lo, hi = gauge_by_bisection(P, x)
            row["bisection"] = [rational_to_json(lo), rational_to_json(hi)]
            ok = ok and lo <= g <= hi
        row["agree"] = ok
        agree = agree and ok
        rows.append(row)
    return {"seed": seed, "all_agree": agree, "points": rows}, 0 if agree else 1


def _cmd_horo(obj, opts):
    P = _need_polytope(obj)
    path = _path(opts, P.ambient_dim)
    zs = random_qvecs(opts["seed"], opts["samples"], P.ambient_dim, bound=5, max_den=4)
    schedule = opts.get("schedule")
    rep = verify_convergence(P, path, zs, schedule)
    out = rep.to_json()
    out["seed"] = opts["seed"]
    out["samples"] = [qvec_to_json(z) for z in zs]
    return out, 0 if rep.stabilized else 1


def _cmd_classify(obj, opts):
    P = _need_polytope(obj)
    path = _path(opts, P.ambient_dim)
    h = classify_limit_horo(P, path)
    F = fan_from_polytope(P)
    bp = classify_limit_complex(F, path) if path.imag is not None else classify_limit_real(F, path)
    sigma = F.cones[bp.cone_id]
    consistent = F.cone_to_face[sigma.id] == h.dual_of.id
    return {"horofunction": h.to_json(), "boundary_point": bp.to_json(), "consistent": consistent}, 0 if consistent else 1


def _cmd_verify(obj, opts):
    rep = verify_correspondence(_need_polytope(obj))
    return rep.to_json(), 0 if rep.passed else 1


def _cmd_polytopal(obj, opts):
    F = _fan_of(obj)
    rep = is_polytopal(F)
    out = {
        "coplanarity_feasible": rep.coplanarity_feasible,
        "strictly_convex_feasible": rep.strictly_convex_feasible,
        "heights": heights_to_json(rep.heights or rep.coplanar_heights),
        "witness_vertices": [qvec_to_json(v) for v in rep.witness.vertices] if rep.witness else None,
        "witness_fan_matches": rep.witness_fan_matches,
    }
    failed = opts.get("expect_feasible") and not rep.strictly_convex_feasible
    return out, 1 if failed else 0


def _cmd_render(obj, opts):
    P = _need_polytope(obj)
    return render_svg(P, fan_from_polytope(P)), 0


HANDLERS = {name: globals()[f"_cmd_{name}"] for name in COMMANDS}


def run(job: Job) -> int:
    try:
        obj = _load_input(job.input_path)
        result, status = HANDLERS[job.command](obj, job.options)
    except UsageError as exc:
        print(f"toric-horo: {exc}", file=sys.stderr)
        return 2
    except ToricHoroError as exc:
        print(f"toric-horo: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    text = result if isinstance(result, str) else dumps(result)
    if job.output_path:
        Path(job.output_path).write_text(text)
    else:
        sys.stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toric-horo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="JSON file or corpus fixture name")
        p.add_argument("-o", "--output", help="write here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        if name in ("horo", "classify"):
            p.add_argument("--u", help="direction, comma-separated rationals")
            p.add_argument("--c", help="offset, comma-separated rationals")
        if name == "classify":
            p.add_argument("--y0", help="imaginary part for the complex model")
        if name == "horo":
            p.add_argument("--samples", type=int, default=25)
            p.add_argument("--schedule", help="comma-separated times (default 1,2,4,...,65536)")
        if name == "norm":
            p.add_argument("--x", help="evaluate at one point instead of random samples")
            p.add_argument("--samples", type=int, default=1000)
            p.add_argument("--oracle-samples", type=int, default=100)
        if name == "polytopal":
            p.add_argument("--expect-feasible", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = {
            "seed": args.seed,
            "u": _vector(getattr(args, "u", None)),
            "c": _vector(getattr(args, "c", None)),
            "y0": _vector(getattr(args, "y0", None)),
            "x": _vector(getattr(args, "x", None)),
            "schedule": _vector(getattr(args, "schedule", None)),
            "samples": getattr(args, "samples", None),
            "oracle_samples": getattr(args, "oracle_samples", 0),
            "expect_feasible": getattr(args, "expect_feasible", False),
        }
    except UsageError as exc:
        print(f"toric-horo: {exc}", file=sys.stderr)
        return 2
    return run(Job(args.command, args.input, args.output, opts))


if __name__ == "__main__":
    sys.exit(main())
