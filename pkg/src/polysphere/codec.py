"""JSON and CSV formats.

polygon      {"n": int, "r": float, "vertices": [[x, y], ...]}
coordinates  {"n": int, "r": float, "t": [...], "i0": int, "x": [...]}
plan         {"spec": {"n", "r"}, "mode": str, "angle": float, "steps": int,
              "frames": [polygon, ...], "start": polygon, "goal": polygon}

Floats are written with ``repr`` (shortest round-trip form), so decoding an
encoded value gives back the identical float.
"""
import csv
import io
import json
import math

import numpy as np

from .errors import ParseError, PolysphereError, ValidationError
from .geometry import DEFAULT_TOL
from .planner import MODES, PathPlan
from .polygon import ModuliSpec, PolygonConfig, validate
from .sphere import SuspensionCoords, cart_to_susp, susp_to_cart

__all__ = [
    "dumps",
    "loads",
    "polygon_to_dict",
    "polygon_from_dict",
    "encode_polygon",
    "decode_polygon",
    "coords_to_dict",
    "coords_from_dict",
    "plan_to_dict",
    "plan_from_dict",
    "plan_to_csv",
]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _no_constant(name):
    raise ParseError(f"non-standard JSON constant {name}")


def loads(text: str):
    try:
        return json.loads(text, parse_constant=_no_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}", line=exc.lineno) from exc


def _f(x) -> float:
    x = float(x)
    return x + 0.0  # normalizes -0.0


def _require(d, key, kind, where):
    if not isinstance(d, dict):
        raise ParseError(f"{where}: expected an object", field=where)
    if key not in d:
        raise ParseError(f"{where}: missing field '{key}'", field=key)
    value = d[key]
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(f"{where}: field '{key}' must be an integer", field=key)
    elif kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise ParseError(f"{where}: field '{key}' must be a finite number", field=key)
    elif kind is list and not isinstance(value, list):
        raise ParseError(f"{where}: field '{key}' must be an array", field=key)
    return value


def _spec(d, where):
    n = _require(d, "n", int, where)
    r = _require(d, "r", float, where)
    try:
        return ModuliSpec(n, r)
    except PolysphereError as exc:
        raise ParseError(f"{where}: {exc}", field="r") from exc


def polygon_to_dict(p: PolygonConfig) -> dict:
    return {
        "n": p.spec.n,
        "r": _f(p.spec.r),
        "vertices": [[_f(x), _f(y)] for x, y in p.vertices],
    }


def polygon_from_dict(d, tol: float = DEFAULT_TOL, check: bool = True, where="polygon") -> PolygonConfig:
    spec = _spec(d, where)
    verts = _require(d, "vertices", list, where)
    if len(verts) != spec.n:
        raise ParseError(
            f"{where}: 'vertices' has {len(verts)} entries, arity n={spec.n} requires {spec.n}",
            field="vertices",
        )
    for k, pt in enumerate(verts):
        if (
            not isinstance(pt, list)
            or len(pt) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in pt)
        ):
            raise ParseError(f"{where}: vertices[{k}] must be [x, y]", field=f"vertices[{k}]")
    p = PolygonConfig(spec, verts)
    if check:
        report = validate(p, tol)
        if report:
            raise ValidationError(
                f"{where} invalid at tol={tol}: " + "; ".join(str(v) for v in report), report
            )
    return p


def encode_polygon(p: PolygonConfig) -> str:
    return dumps(polygon_to_dict(p))


def decode_polygon(text: str, tol: float = DEFAULT_TOL, check: bool = True) -> PolygonConfig:
    return polygon_from_dict(loads(text), tol, check)


def coords_to_dict(spec: ModuliSpec, s: SuspensionCoords) -> dict:
    s = s.canonical()
    return {
        "n": spec.n,
        "r": _f(spec.r),
        "t": [_f(v) for v in s.t],
        "i0": s.i0,
        "x": [_f(v) for v in susp_to_cart(s)],
    }


def coords_from_dict(d, tol: float = DEFAULT_TOL, where="coordinates"):
    """Returns ``(spec, SuspensionCoords)``. Uses ``t`` when present,
    otherwise converts the Cartesian ``x``."""
    spec = _spec(d, where)
    if "t" in d:
        t = _require(d, "t", list, where)
        if len(t) != spec.n - 2:
            raise ParseError(f"{where}: 't' must have {spec.n - 2} entries", field="t")
        try:
            s = SuspensionCoords.from_t(t, tol)
        except (PolysphereError, TypeError) as exc:
            raise ParseError(f"{where}: {exc}", field="t") from exc
        if "i0" in d and _require(d, "i0", int, where) != s.i0:
            raise ParseError(f"{where}: 'i0'={d['i0']} disagrees with t (first +-1 at {s.i0})", field="i0")
        return spec, s
    x = _require(d, "x", list, where)
    if len(x) != spec.n - 2:
        raise ParseError(f"{where}: 'x' must have {spec.n - 2} entries", field="x")
    try:
        return spec, cart_to_susp(np.array(x, dtype=float), tol)
    except (PolysphereError, TypeError) as exc:
        raise ParseError(f"{where}: {exc}", field="x") from exc


def plan_to_dict(pl: PathPlan) -> dict:
    return {
        "spec": {"n": pl.spec.n, "r": _f(pl.spec.r)},
        "mode": pl.mode,
        "angle": _f(pl.angle),
        "steps": pl.steps,
        "frames": [polygon_to_dict(f) for f in pl.frames],
        "start": polygon_to_dict(pl.start),
        "goal": polygon_to_dict(pl.goal),
    }


def plan_from_dict(d, tol: float = 1e-8) -> PathPlan:
    spec = _spec(_require(d, "spec", dict, "plan"), "plan.spec")
    mode = d.get("mode")
    if mode not in MODES:
        raise ParseError(f"plan: 'mode' must be one of {MODES}", field="mode")
    angle = _require(d, "angle", float, "plan")
    frames = [
        polygon_from_dict(f, tol, check=False, where=f"plan.frames[{k}]")
        for k, f in enumerate(_require(d, "frames", list, "plan"))
    ]
    start = polygon_from_dict(d.get("start", d["frames"][0] if frames else None), tol, False, "plan.start")
    goal = polygon_from_dict(d.get("goal", d["frames"][-1] if frames else None), tol, False, "plan.goal")
    for name, p in (("start", start), ("goal", goal), *(("frames", f) for f in frames)):
        if p.spec != spec:
            raise ParseError(f"plan: {name} spec differs from plan spec", field=name)
    return PathPlan(spec, mode, frames, float(angle), start, goal)


def plan_to_csv(pl: PathPlan) -> str:
    """One row per frame: ``frame, x0, y0, ..., x{n-1}, y{n-1}``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["frame"] + [f"{a}{k}" for k in range(pl.spec.n) for a in "xy"])
    for idx, f in enumerate(pl.frames):
        w.writerow([idx] + [repr(_f(c)) for c in f.vertices.ravel()])
    return buf.getvalue()
