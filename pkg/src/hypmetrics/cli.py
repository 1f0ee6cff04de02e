"""Command-line front end: evaluate metrics, run verification sweeps,
solve the modulus constant, trace Cassinian ovals, measure distortion.

Same command, flags, and seed always produce byte-identical output.
"""

import argparse
import json
import os
import sys

import numpy as np

from hypmetrics import analysis, metrics, mobius
from hypmetrics.errors import (
    DegenerateFoci,
    DimensionMismatch,
    HypMetricsError,
    ImageEscape,
    NoConvergence,
    PointOutsideDomain,
    PoleInput,
    PunctureOutsideBall,
    UnboundedDomain,
)
from hypmetrics.geom import (
    Ball,
    PuncturedSpace,
    PuncturedUnitBall,
    SampledDomain,
    UnitBall,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4
EXIT_SOLVER = 5

_DOMAIN_ERRORS = (DimensionMismatch, PointOutsideDomain, ImageEscape,
                  PunctureOutsideBall, PoleInput, UnboundedDomain)


def _default_seed():
    return int(os.environ.get("HYPMETRICS_SEED", "42"))


def _default_samples():
    return int(os.environ.get("HYPMETRICS_SAMPLES", "10000"))


def parse_point(text):
    return np.array([float(v) for v in text.split(",")])


def parse_domain(spec):
    d = json.loads(spec) if isinstance(spec, str) else spec
    kind = d["kind"]
    if kind == "unit_ball":
        return UnitBall(int(d["dim"]))
    if kind == "ball":
        return Ball(np.asarray(d["center"], float), float(d["radius"]))
    if kind == "punctured_unit_ball":
        return PuncturedUnitBall(np.asarray(d["a"], float))
    if kind == "punctured_space":
        return PuncturedSpace(np.asarray(d["p"], float))
    if kind == "polygon":
        return SampledDomain.from_polygon(
            d["vertices"], samples_per_edge=int(d.get("samples_per_edge", 1024)))
    raise ValueError(f"unknown domain kind {kind!r}")


def _emit(text, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj):
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_eval(args):
    d = parse_domain(args.domain)
    x = parse_point(args.x)
    y = parse_point(args.y)
    result = metrics.METRIC_SCALAR[args.metric](d, x, y)
    _emit(_dumps(result.to_dict()), args.output)
    return EXIT_OK


def cmd_verify(args):
    names = analysis.CHECK_NAMES if args.check == "all" else (args.check,)
    a = parse_point(args.a) if args.a else None
    reports = []
    for name in names:
        reports.extend(analysis.run_check(name, samples=args.samples,
                                          seed=args.seed, a=a))
    if args.format == "csv":
        lines = ["check,samples,seed,passed,worst_margin"]
        for r in reports:
            lines.append(f"{r.check_name},{r.samples},{r.seed},"
                         f"{str(r.passed).lower()},{r.worst_margin!r}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(_dumps([r.to_dict() for r in reports]), args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def cmd_constants(args):
    result = analysis.solve_constant_c()
    _emit(_dumps(result.to_dict()), args.output)
    return EXIT_OK


def cmd_ovals(args):
    spec = metrics.OvalSpec(focus1=parse_point(args.focus1),
                            focus2=parse_point(args.focus2),
                            level=args.level, resolution=args.resolution)
    pts = metrics.cassinian_oval(spec)
    lines = ["x,y"] + [f"{float(p[0])!r},{float(p[1])!r}" for p in pts]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_distort(args):
    if args.map_file:
        with open(args.map_file) as fh:
            map_spec = fh.read()
    else:
        map_spec = args.map
    m = mobius.map_from_json(map_spec)
    out = {}
    if args.domain and args.image_domain:
        d = parse_domain(args.domain)
        d_image = parse_domain(args.image_domain)
        res = analysis.measure_distortion(m, d, d_image, args.metric,
                                          samples=args.samples, seed=args.seed)
        out["sup_ratio"] = res.sup_ratio
        out["inf_ratio"] = res.inf_ratio
        out["sup_witness"] = res.sup_witness
        out["inf_witness"] = res.inf_witness
    if args.points:
        radii = [float(r) for r in args.radii.split(",")]
        dil = []
        for text in args.points.split(";"):
            x = parse_point(text)
            est = analysis.linear_dilatation(m, x, radii)
            dil.append({"point": list(x), "ratio": est.ratio,
                        "per_radius": [list(p) for p in est.per_radius]})
        out["dilatation"] = dil
    _emit(_dumps(out), args.output)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="hypmetrics")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--output", default=None)

    sp = sub.add_parser("eval", help="evaluate a metric between two points")
    sp.add_argument("--metric", choices=("tau", "u", "j"), required=True)
    sp.add_argument("--domain", required=True, help="domain spec JSON")
    sp.add_argument("--x", required=True, help="comma-separated coordinates")
    sp.add_argument("--y", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("verify", help="run theorem verification sweeps")
    sp.add_argument("--check", default="all",
                    choices=analysis.CHECK_NAMES + ("all",))
    sp.add_argument("--samples", type=int, default=_default_samples())
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.add_argument("--a", default=None,
                    help="puncture for mobius_distortion, e.g. 0.5,0")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("constants", help="solve the modulus constant")
    common(sp)
    sp.set_defaults(fn=cmd_constants)

    sp = sub.add_parser("ovals", help="trace a Cassinian oval to CSV")
    sp.add_argument("--focus1", required=True)
    sp.add_argument("--focus2", required=True)
    sp.add_argument("--level", type=float, required=True)
    sp.add_argument("--resolution", type=int, default=256)
    common(sp)
    sp.set_defaults(fn=cmd_ovals)

    sp = sub.add_parser("distort", help="measure metric distortion of a map")
    sp.add_argument("--map", default=None, help="map chain JSON")
    sp.add_argument("--map-file", default=None)
    sp.add_argument("--domain", default=None)
    sp.add_argument("--image-domain", default=None)
    sp.add_argument("--metric", choices=("tau", "u", "j"), default="tau")
    sp.add_argument("--samples", type=int, default=_default_samples())
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.add_argument("--points", default=None,
                    help="semicolon-separated points for dilatation")
    sp.add_argument("--radii", default="1e-2,1e-3,1e-4")
    common(sp)
    sp.set_defaults(fn=cmd_distort)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (json.JSONDecodeError, KeyError, DegenerateFoci) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _DOMAIN_ERRORS as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NoConvergence as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ValueError, HypMetricsError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
