"""Planar primitives: angles, the arc a disk cuts off a unit circle, and its
linear counterclockwise parametrization.

Half-angle derivation
---------------------
Let ``c`` be the center of the unit circle, ``T`` the center of the
constraint disk of radius ``R``, and ``d = |T - c|``. A point ``e`` where the
unit circle meets the disk boundary forms the triangle ``(c, T, e)`` with
sides ``|e - c| = 1``, ``|T - c| = d`` and ``|T - e| = R``. The law of
cosines at ``c`` gives the angle ``D`` between ``e - c`` and ``T - c``::

    cos D = (d**2 + 1 - R**2) / (2 d)

The points of the unit circle within distance ``R`` of ``T`` are exactly
those whose direction lies within ``D`` of the direction ``c -> T``, because
the distance to ``T`` grows monotonically with the angular offset from that
direction. The arc is therefore ``theta_c + s`` for ``s`` in ``[-D, D]``, and
the linear parameter is ``t = s / D``.

Numerically ``D`` is evaluated as ``2 * atan2(sqrt(1 - cos D), sqrt(1 + cos D))``
with both factors written as products, ``1 - cos D = (R - d + 1)(R + d - 1) / 2d``
and ``1 + cos D = (d + 1 - R)(d + 1 + R) / 2d``. This keeps full relative
precision as the arc shrinks to a point (``d -> R + 1``) where ``arccos`` of
the raw ratio loses half the significant digits. Negative factors, which only
arise from rounding at tangency, are clamped to zero.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DegenerateArc,
    DegenerateCenter,
    NoIntersection,
    NotOnCircle,
    OutOfRange,
    OutsideArc,
)

DEFAULT_TOL = 1e-9
# for polygons generated in float64 by this package; see phi.phi_forward
EXACT_TOL = 1e-12
# below this half-angle the linear parameter carries no usable information
MIN_HALF_ANGLE = 1e-7

TWO_PI = 2.0 * math.pi


class PlanarPoint(NamedTuple):
    x: float
    y: float


def as_point(p) -> PlanarPoint:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite point ({x}, {y})")
    return PlanarPoint(x, y)


def distance(a, b) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def direction(a, b) -> float:
    """Angle of the vector ``b - a`` in (-pi, pi]."""
    return wrap_angle(math.atan2(b[1] - a[1], b[0] - a[0]))


def wrap_angle(a: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    w = math.remainder(a, TWO_PI)
    if w <= -math.pi:
        w += TWO_PI
    return w


def half_angle(d: float, radius: float) -> float:
    """Angular half-width of the part of a unit circle within ``radius`` of a
    point at distance ``d`` from its center."""
    one_minus = (radius - d + 1.0) * (radius + d - 1.0)
    one_plus = (d + 1.0 - radius) * (d + 1.0 + radius)
    return 2.0 * math.atan2(math.sqrt(max(one_minus, 0.0)), math.sqrt(max(one_plus, 0.0)))


@dataclass(frozen=True)
class ArcSpec:
    """Arc of the unit circle about ``center`` spanning
    ``theta_c - half_angle`` to ``theta_c + half_angle`` counterclockwise."""

    center: PlanarPoint
    theta_c: float
    half_angle: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        if not 0.0 <= self.half_angle <= math.pi:
            raise ValueError(f"half_angle {self.half_angle} outside [0, pi]")
        if not -math.pi < self.theta_c <= math.pi:
            raise ValueError(f"theta_c {self.theta_c} outside (-pi, pi]")

    def endpoints(self):
        return arc_point(self, -1.0), arc_point(self, 1.0)


def cut_arc(center, target, radius: float, tol: float = DEFAULT_TOL) -> ArcSpec:
    """Arc of the unit circle about ``center`` lying in the closed disk of
    ``radius`` about ``target``.

    Raises :class:`NoIntersection` when the circle and the disk boundary do
    not meet, and :class:`DegenerateCenter`
    when ``center`` and ``target`` coincide.
    """
    center = as_point(center)
    target = as_point(target)
    if radius < 0:
        raise ValueError(f"negative radius {radius}")
    d = distance(center, target)
    if d <= tol:
        raise DegenerateCenter(f"center and target coincide (d={d:.3e})")
    if d > radius + 1.0 + tol:
        raise NoIntersection(f"unit circle misses disk: d={d!r} > R+1={radius + 1.0!r}")
    if d < radius - 1.0 - tol:
        raise NoIntersection(f"unit circle inside disk: d={d!r} < R-1={radius - 1.0!r}")
    if d < 1.0 - radius - tol:
        raise NoIntersection(f"disk inside unit circle: d={d!r} < 1-R={1.0 - radius!r}")
    return ArcSpec(center, direction(center, target), half_angle(d, radius))


def arc_point(arc: ArcSpec, t: float) -> PlanarPoint:
    if not -1.0 <= t <= 1.0:
        raise OutOfRange(f"arc parameter {t!r} outside [-1, 1]")
    a = arc.theta_c + t * arc.half_angle
    return PlanarPoint(arc.center.x + math.cos(a), arc.center.y + math.sin(a))


def angular_offset(arc: ArcSpec, p) -> float:
    """Wrapped angle of ``p`` about the arc center, measured from ``theta_c``."""
    return wrap_angle(direction(arc.center, p) - arc.theta_c)


def arc_parameter(arc: ArcSpec, p, tol: float = DEFAULT_TOL) -> float:
    """Parameter in [-1, 1] of a point on the arc; inverse of :func:`arc_point`."""
    if arc.half_angle <= max(tol, MIN_HALF_ANGLE):
        raise DegenerateArc(f"half_angle {arc.half_angle:.3e} too small to parametrize")
    radial = abs(distance(arc.center, p) - 1.0)
    if radial > tol:
        raise NotOnCircle(f"point is {radial:.3e} off the unit circle")
    offset = angular_offset(arc, p)
    if abs(offset) > arc.half_angle + tol:
        raise OutsideArc(
            f"angular offset {offset!r} exceeds half_angle {arc.half_angle!r}"
        )
    return min(1.0, max(-1.0, offset / arc.half_angle))
