"""Command-line interface.

    polysphere map POLYGON.json              polygon -> coordinates
    polysphere unmap COORDS.json             coordinates -> polygon
    polysphere reflect POLYGON.json          mirror across the x-axis
    polysphere plan START.json GOAL.json     geodesic morph
    polysphere sample --n N --r R            random polygons
    polysphere check --n N --r R             sampled property suite
    polysphere render FILE.json --out PATH   SVG of a polygon or plan

JSON goes to stdout (or ``--out``), diagnostics to stderr. Exit status is 0
on success, 1 for invalid input or failed checks, 2 for usage errors.
"""
import argparse
import sys

from . import codec
from .check import run_checks
from .errors import IoError, ParseError, PolysphereError, ValidationError
from .geometry import DEFAULT_TOL, EXACT_TOL
from .kernels import cart_to_susp_batch, phi_inverse_batch
from .phi import phi_forward, phi_inverse
from .planner import MODES, ORIENTED, plan
from .polygon import ModuliSpec, PolygonConfig, reflect
from .render import render_plan, render_polygon, write_plan_svgs, write_svg
from .sphere import sample_uniform_batch


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror}") from exc


def _emit(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        _write(out, text)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _tol(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not 0.0 < v < 1.0:
        raise argparse.ArgumentTypeError(f"tolerance must lie in (0, 1), got {v}")
    return v


def _spec_args(parser, args):
    if args.n is None or args.r is None:
        parser.error("--n and --r are required")
    try:
        return ModuliSpec(args.n, args.r)
    except PolysphereError as exc:
        parser.error(str(exc))


def cmd_map(args, parser):
    p = codec.decode_polygon(_read(args.input), args.tol)
    _emit(codec.dumps(codec.coords_to_dict(p.spec, phi_forward(p, args.tol))), args.out)


def cmd_unmap(args, parser):
    spec, s = codec.coords_from_dict(codec.loads(_read(args.input)), args.tol)
    _emit(codec.encode_polygon(phi_inverse(spec, s, args.tol)), args.out)


def cmd_reflect(args, parser):
    p = codec.decode_polygon(_read(args.input), args.tol)
    _emit(codec.encode_polygon(reflect(p)), args.out)


def cmd_plan(args, parser):
    p = codec.decode_polygon(_read(args.start), args.tol)
    q = codec.decode_polygon(_read(args.goal), args.tol)
    if p.spec != q.spec:
        raise ValidationError(f"start {p.spec} and goal {q.spec} differ")
    pl = plan(p.spec, p, q, args.steps, args.mode, args.tol)
    _emit(codec.dumps(codec.plan_to_dict(pl)), args.out)
    if args.csv:
        _write(args.csv, codec.plan_to_csv(pl))
    if args.svg_dir:
        write_plan_svgs(args.svg_dir, render_plan(pl, args.overlay))


def cmd_sample(args, parser):
    spec = _spec_args(parser, args)
    X = sample_uniform_batch(spec, args.seed, args.count)
    T, i0 = cart_to_susp_batch(X, args.tol)
    V = phi_inverse_batch(spec.n, spec.r, T, i0)
    polys = [codec.polygon_to_dict(PolygonConfig(spec, v)) for v in V]
    _emit(codec.dumps(polys), args.out)


def cmd_check(args, parser):
    spec = _spec_args(parser, args)
    summary = run_checks(spec, args.count, args.seed, args.tol)
    _emit(codec.dumps(summary), args.out)
    return 0 if summary["pass"] else 1


def cmd_render(args, parser):
    data = codec.loads(_read(args.input))
    if isinstance(data, dict) and "frames" in data:
        pl = codec.plan_from_dict(data)
        write_plan_svgs(args.out, render_plan(pl, args.overlay, args.tol))
    else:
        p = codec.polygon_from_dict(data, args.tol)
        write_svg(args.out, render_polygon(p, args.overlay, args.tol))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polysphere",
        description="Polygon spaces as spheres and projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, tol=DEFAULT_TOL):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--tol", type=_tol, default=tol, help=f"absolute tolerance (default {tol:g})")
        return sp

    for name, func, help in (
        ("map", cmd_map, "polygon JSON -> coordinates JSON"),
        ("unmap", cmd_unmap, "coordinates JSON -> polygon JSON"),
        ("reflect", cmd_reflect, "mirror a polygon across the x-axis"),
    ):
        sp = add(name, func, help)
        sp.add_argument("input", help="JSON file, or - for stdin")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = add("plan", cmd_plan, "geodesic morph between two polygons", EXACT_TOL)
    sp.add_argument("start")
    sp.add_argument("goal")
    sp.add_argument("--steps", type=_positive, default=16)
    sp.add_argument("--mode", choices=MODES, default=ORIENTED)
    sp.add_argument("--out", help="plan JSON file (default stdout)")
    sp.add_argument("--csv", help="also write the frame trajectory as CSV")
    sp.add_argument("--svg-dir", help="also write one SVG per frame into this directory")
    sp.add_argument("--overlay", action="store_true", help="draw construction circles in SVGs")

    for name, func, help, count in (
        ("sample", cmd_sample, "uniformly sampled polygons", 1),
        ("check", cmd_check, "sampled round-trip / equivariance / validity checks", 1000),
    ):
        sp = add(name, func, help, EXACT_TOL)
        sp.add_argument("--n", type=int)
        sp.add_argument("--r", type=float)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--count", type=_positive, default=count)
        sp.add_argument("--out", help="output file (default stdout)")

    sp = add("render", cmd_render, "SVG of a polygon, or one SVG per plan frame")
    sp.add_argument("input", help="polygon or plan JSON file, or - for stdin")
    sp.add_argument("--out", required=True, help="SVG file (polygon) or directory (plan)")
    sp.add_argument("--overlay", action="store_true", help="draw unit circles and constraint arcs")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser) or 0
    except (PolysphereError, ValueError) as exc:
        print(f"polysphere {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
