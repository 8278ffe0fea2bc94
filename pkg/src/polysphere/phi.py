"""The reflection-equivariant homeomorphism between polygon space and the
sphere, and its inverse.

Vertex ``x_i`` lies on the unit circle about ``x_{i-1}``, inside the disk of
radius ``n-1-i`` about ``x_{n-1}``. The admissible part of that circle is an
arc (see :mod:`polysphere.geometry`) and the coordinate ``t_i`` is the linear
counterclockwise parameter of ``x_i`` on it. The first vertex sitting on the
far boundary of its disk gets ``t_i = +-1``; every later vertex is then
forced onto the straight segment to ``x_{n-1}``.
"""
import numpy as np

from .errors import (
    InconsistentGeometry,
    InvalidCoords,
    InvalidPolygon,
    NoIntersection,
    NotOnCircle,
    OutsideArc,
    DegenerateArc,
    DegenerateCenter,
    SpecMismatch,
)
from .geometry import DEFAULT_TOL, angular_offset, arc_parameter, arc_point, cut_arc, distance
from .polygon import ModuliSpec, PolygonConfig, validate
from .sphere import SuspensionCoords, cart_to_susp, susp_to_cart

__all__ = [
    "phi_forward",
    "phi_inverse",
    "phi_cart",
    "phi_inverse_cart",
    "roundtrip_error",
]


def phi_forward(p: PolygonConfig, tol: float = DEFAULT_TOL) -> SuspensionCoords:
    """Suspension coordinates of a polygon. Rejects polygons that fail
    :func:`~polysphere.polygon.validate` at ``tol``.

    A vertex within ``tol`` of its far bound ends the walk. The map has a
    square-root singularity there, so such a snap moves the image by roughly
    ``sqrt(tol)``; pass :data:`~polysphere.geometry.EXACT_TOL` for polygons
    computed in float64 rather than measured or plotted.
    """
    violations = validate(p, tol)
    if violations:
        raise InvalidPolygon(
            f"polygon fails validation: {violations[0]}"
            + (f" (+{len(violations) - 1} more)" if len(violations) > 1 else ""),
            violations,
        )
    n = p.spec.n
    target = p.spec.target
    v = p.vertices
    t = [0.0] * (n - 2)
    for i in range(1, n - 1):
        radius = n - 1 - i
        try:
            arc = cut_arc(v[i - 1], target, radius, tol)
            if abs(distance(v[i], target) - radius) <= tol:
                t[i - 1] = 1.0 if angular_offset(arc, v[i]) >= 0 else -1.0
                return SuspensionCoords(n, tuple(t), i)
            t[i - 1] = arc_parameter(arc, v[i], tol)
        except (NoIntersection, DegenerateCenter, NotOnCircle, OutsideArc, DegenerateArc) as exc:
            raise InconsistentGeometry(f"vertex {i}: {exc}") from exc
    # validate() bounds d(x_{n-2}, x_{n-1}) to 1 +- tol, so the loop returns
    raise InconsistentGeometry("no vertex attains its far bound")


def phi_inverse(spec: ModuliSpec, s: SuspensionCoords, tol: float = DEFAULT_TOL) -> PolygonConfig:
    """Rebuild the polygon: walk the arcs for ``i <= i0``, then lay the
    remaining vertices evenly on the segment to ``x_{n-1}``."""
    if s.n != spec.n:
        raise SpecMismatch(f"coordinates are for n={s.n}, spec has n={spec.n}")
    n, r = spec.n, spec.r
    target = spec.target
    v = np.zeros((n, 2))
    v[n - 1] = target
    for i in range(1, s.i0 + 1):
        try:
            arc = cut_arc(v[i - 1], target, n - 1 - i, tol)
        except (NoIntersection, DegenerateCenter) as exc:
            raise InvalidCoords(f"cannot place vertex {i}: {exc}") from exc
        v[i] = arc_point(arc, s.t[i - 1])
    head = v[s.i0].copy()
    steps = n - 1 - s.i0
    for k in range(s.i0 + 1, n - 1):
        v[k] = head + (k - s.i0) * (v[n - 1] - head) / steps
    return PolygonConfig(spec, v)


def phi_cart(p: PolygonConfig, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The polygon's image as a unit vector in ``R^{n-2}``."""
    return susp_to_cart(phi_forward(p, tol))


def phi_inverse_cart(spec: ModuliSpec, x, tol: float = DEFAULT_TOL) -> PolygonConfig:
    return phi_inverse(spec, cart_to_susp(x, tol), tol)


def roundtrip_error(spec: ModuliSpec, p: PolygonConfig, tol: float = DEFAULT_TOL) -> float:
    """Largest vertex displacement between ``p`` and its image under the
    inverse of the forward map."""
    if p.spec != spec:
        raise SpecMismatch(f"polygon spec {p.spec} differs from {spec}")
    q = phi_inverse(spec, phi_forward(p, tol), tol)
    return float(np.max(np.hypot(*(q.vertices - p.vertices).T)))
