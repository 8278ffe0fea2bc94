"""Planar polygons with one long side, as points of a sphere.

Polygons with ``n - 1`` unit sides and one side of length ``r`` in
``[n - 2, n - 1)`` form a space homeomorphic to the sphere ``S^{n-3}``; the
homeomorphism turns reflection of the polygon into the antipodal map, so
polygons up to reflection form the projective space ``RP^{n-3}``. This
package computes the map both ways and plans polygon motions along great
circles.
"""
from ._accel import BACKEND
from .errors import PolysphereError
from .geometry import DEFAULT_TOL, EXACT_TOL, ArcSpec, PlanarPoint, arc_parameter, arc_point, cut_arc
from .phi import phi_cart, phi_forward, phi_inverse, phi_inverse_cart, roundtrip_error
from .planner import ORIENTED, UNORIENTED, PathPlan, plan, validate_plan
from .polygon import ModuliSpec, PolygonConfig, Violation, reflect, tail_index, validate
from .sphere import (
    SuspensionCoords,
    antipode,
    cart_to_susp,
    projective_canonical,
    sample_uniform,
    slerp,
    sphere_angle,
    susp_equiv,
    susp_to_cart,
)

__version__ = "0.1.0"
