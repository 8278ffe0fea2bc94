"""Polygon morphs from great-circle arcs on the sphere.

A plan maps both endpoint polygons to the sphere, interpolates along the
shortest great circle, and pulls every interpolated point back to a polygon.
In ``unoriented`` mode a polygon and its mirror image are the same
configuration, so the goal's image may be replaced by its antipode when that
is closer; the path then ends at the mirror image of the requested goal.

The paths are geodesics of the round metric carried over from the sphere,
not minimizers of any mechanical energy.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AntipodalEndpoints, SpecMismatch
from .geometry import EXACT_TOL
from .kernels import cart_to_susp_batch, phi_forward_batch, phi_inverse_batch, susp_to_cart_batch
from .phi import phi_cart
from .polygon import ModuliSpec, PolygonConfig, Violation, reflect, validate
from .sphere import sphere_angle

__all__ = ["ORIENTED", "UNORIENTED", "PathPlan", "plan", "validate_plan", "frame_images"]

ORIENTED = "oriented"
UNORIENTED = "unoriented"
MODES = (ORIENTED, UNORIENTED)


@dataclass(frozen=True, eq=False)
class PathPlan:
    spec: ModuliSpec
    mode: str
    frames: list
    angle: float
    start: PolygonConfig = field(repr=False)
    goal: PolygonConfig = field(repr=False)

    @property
    def steps(self) -> int:
        return len(self.frames) - 1


def _great_circle(u, v, steps):
    """Rows ``k = 0..steps`` of the constant-speed arc from ``u`` to ``v``."""
    theta = sphere_angle(u, v)
    s = np.arange(steps + 1) / steps
    if theta == 0.0:
        return np.tile(u, (steps + 1, 1)), theta
    w = v - float(u @ v) * u
    w /= np.linalg.norm(w)
    pts = np.cos(s * theta)[:, None] * u + np.sin(s * theta)[:, None] * w
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    pts[-1] = v
    return pts, theta


def plan(
    spec: ModuliSpec,
    p: PolygonConfig,
    q: PolygonConfig,
    steps: int = 16,
    mode: str = ORIENTED,
    tol: float = EXACT_TOL,
) -> PathPlan:
    """Plan ``steps`` equal-angle moves from ``p`` to ``q``.

    Raises :class:`AntipodalEndpoints` in oriented mode when the images of
    ``p`` and ``q`` are antipodal, since the great circle is then not unique.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    for poly in (p, q):
        if poly.spec != spec:
            raise SpecMismatch(f"polygon spec {poly.spec} differs from {spec}")
    u = phi_cart(p, tol)
    v = phi_cart(q, tol)
    if mode == UNORIENTED and float(u @ v) < 0.0:
        v = -v
    if sphere_angle(u, v) >= math.pi - tol:
        raise AntipodalEndpoints(
            "start and goal map to antipodal points; add a waypoint or plan unoriented"
        )
    pts, theta = _great_circle(u, v, steps)
    T, i0 = cart_to_susp_batch(pts, tol)
    V = phi_inverse_batch(spec.n, spec.r, T, i0)
    frames = [PolygonConfig(spec, vk) for vk in V]
    return PathPlan(spec, mode, frames, theta, p, q)


def frame_images(pl: PathPlan, tol: float = EXACT_TOL) -> np.ndarray:
    """Unit vectors of every frame, one row per frame."""
    V = np.stack([f.vertices for f in pl.frames])
    T, i0 = phi_forward_batch(pl.spec.n, pl.spec.r, V, tol)
    return susp_to_cart_batch(T, i0)


def _max_vertex_gap(a: PolygonConfig, b: PolygonConfig) -> float:
    return float(np.max(np.hypot(*(a.vertices - b.vertices).T)))


def validate_plan(pl: PathPlan, tol: float = 1e-8) -> list:
    """Report every broken plan invariant as :class:`Violation` entries.

    Frame-level problems carry the frame index and the polygon violation in
    ``bound``; ``endpoint`` entries hold the measured vertex distance.
    """
    out = []
    for k, frame in enumerate(pl.frames):
        if frame.spec != pl.spec:
            out.append(Violation("frame-spec", k, float("nan"), f"spec {pl.spec}"))
            continue
        for viol in validate(frame, tol):
            out.append(Violation(f"frame-{viol.kind}", k, viol.measured, f"{viol}"))
    if not pl.frames:
        return out + [Violation("frames", 0, 0.0, ">= 1 frame")]

    start_err = _max_vertex_gap(pl.frames[0], pl.start)
    if start_err > tol:
        out.append(Violation("endpoint", 0, start_err, f"start within {tol}"))
    goal_err = _max_vertex_gap(pl.frames[-1], pl.goal)
    if pl.mode == UNORIENTED:
        goal_err = min(goal_err, _max_vertex_gap(pl.frames[-1], reflect(pl.goal)))
    if goal_err > tol:
        out.append(Violation("endpoint", len(pl.frames) - 1, goal_err, f"goal within {tol}"))

    limit = math.pi if pl.mode == ORIENTED else math.pi / 2
    if not 0.0 <= pl.angle <= limit + tol:
        out.append(Violation("angle", 0, pl.angle, f"in [0, {limit!r}]"))

    if not any(v.kind.startswith("frame-") for v in out) and len(pl.frames) > 1:
        try:
            X = frame_images(pl, min(tol, EXACT_TOL))
        except Exception as exc:  # reported, not raised
            out.append(Violation("frame-map", 0, float("nan"), str(exc)))
        else:
            step = pl.angle / pl.steps
            for k in range(pl.steps):
                a = sphere_angle(X[k], X[k + 1])
                if abs(a - step) > 1e-9:
                    out.append(Violation("speed", k + 1, a, f"{step!r} within 1e-9"))
    return out
