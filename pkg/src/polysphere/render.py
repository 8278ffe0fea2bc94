"""SVG drawings of polygons and plans.

The overlay mirrors the usual hand-drawn construction: unit circles
``C(x_i, 1)`` for every ``i < i0`` and, about ``x_{n-1}``, the constraint
arcs of radii ``1 .. n-2`` around the stretch where each one crosses the
unit circle it cuts. Output is a pure function of the input and options.
"""
import math
from pathlib import Path

from .errors import IoError
from .geometry import DEFAULT_TOL
from .polygon import PolygonConfig, tail_index

__all__ = ["render_polygon", "render_plan", "write_svg", "write_plan_svgs"]

SCALE = 60.0
MARGIN = 1.3
ARC_PAD = 0.2  # radians of constraint arc drawn past each crossing


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    def __init__(self, p: PolygonConfig):
        v = p.vertices
        self.x0 = min(0.0, float(v[:, 0].min())) - MARGIN
        x1 = max(p.spec.r, float(v[:, 0].max())) + MARGIN
        # symmetric in y so a polygon and its mirror image share a frame
        self.half = float(abs(v[:, 1]).max()) + MARGIN
        self.width = (x1 - self.x0) * SCALE
        self.height = 2.0 * self.half * SCALE

    def xy(self, x, y):
        return _fmt((x - self.x0) * SCALE), _fmt((self.half - y) * SCALE)


def _constraint_arc(cv, p, k):
    """Path for the circle of radius ``k`` about ``x_{n-1}`` near the unit
    circle about ``x_{n-2-k}``."""
    n, r = p.spec.n, p.spec.r
    c = p.vertices[n - 2 - k]
    dx, dy = c[0] - r, c[1]
    d = math.hypot(dx, dy)
    phi = math.atan2(dy, dx)
    if d > 0:
        cos_b = (d * d + k * k - 1.0) / (2.0 * d * k)
        beta = math.acos(min(1.0, max(-1.0, cos_b)))
    else:
        beta = math.pi
    a0, a1 = phi - beta - ARC_PAD, phi + beta + ARC_PAD
    if a1 - a0 >= 2 * math.pi:
        a0, a1 = phi - math.pi + 1e-3, phi + math.pi - 1e-3
    sx, sy = cv.xy(r + k * math.cos(a0), k * math.sin(a0))
    ex, ey = cv.xy(r + k * math.cos(a1), k * math.sin(a1))
    rad = _fmt(k * SCALE)
    large = 1 if a1 - a0 > math.pi else 0
    # counterclockwise in the plane is clockwise on screen (y flipped)
    return (
        f'<path class="constraint-arc" d="M {sx} {sy} A {rad} {rad} 0 {large} 0 {ex} {ey}" '
        f'fill="none" stroke="#c0392b" stroke-width="1" />'
    )


def render_polygon(p: PolygonConfig, overlay: bool = False, tol: float = DEFAULT_TOL, title=None) -> str:
    n = p.spec.n
    v = p.vertices
    cv = _Canvas(p)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(cv.width)}" '
        f'height="{_fmt(cv.height)}" viewBox="0 0 {_fmt(cv.width)} {_fmt(cv.height)}">',
    ]
    if title is not None:
        out.append(f"<title>{title}</title>")
    out.append('<rect width="100%" height="100%" fill="white" />')
    if overlay:
        i0 = tail_index(p, tol)
        out.append('<g class="overlay">')
        for i in range(i0):
            cx, cy = cv.xy(*v[i])
            out.append(
                f'<circle class="unit-circle" cx="{cx}" cy="{cy}" r="{_fmt(SCALE)}" '
                f'fill="none" stroke="#7f8c8d" stroke-width="0.8" />'
            )
        for k in range(1, n - 1):
            out.append(_constraint_arc(cv, p, k))
        out.append("</g>")
    bx0, by0 = cv.xy(*v[n - 1])
    bx1, by1 = cv.xy(*v[0])
    out.append(
        f'<line class="base" x1="{bx0}" y1="{by0}" x2="{bx1}" y2="{by1}" '
        f'stroke="black" stroke-width="2" />'
    )
    for i in range(1, n):
        x1, y1 = cv.xy(*v[i - 1])
        x2, y2 = cv.xy(*v[i])
        out.append(
            f'<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="#2c3e50" stroke-width="2" />'
        )
    for i in range(n):
        cx, cy = cv.xy(*v[i])
        out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="3.5" fill="black" />')
        lx, ly = cv.xy(v[i][0] + 0.08, v[i][1] + 0.08)
        out.append(f'<text class="label" x="{lx}" y="{ly}" font-size="12" font-family="sans-serif">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_plan(plan, overlay: bool = False, tol: float = DEFAULT_TOL) -> list:
    """One SVG document per frame."""
    total = len(plan.frames)
    return [
        render_polygon(f, overlay, tol, title=f"frame {k} of {total - 1}")
        for k, f in enumerate(plan.frames)
    ]


def write_svg(path, text: str) -> Path:
    path = Path(path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    return path


def write_plan_svgs(directory, docs) -> list:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {directory}: {exc}") from exc
    width = max(3, len(str(len(docs) - 1)))
    return [write_svg(directory / f"frame_{k:0{width}d}.svg", doc) for k, doc in enumerate(docs)]
