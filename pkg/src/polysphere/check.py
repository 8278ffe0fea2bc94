"""Sampled verification of the map: round trips, equivariance, validity.

Samples are uniform on the sphere; everything runs through the batch
kernels. The returned summary is plain JSON-able data so the CLI can print
it and tests can compare it against a direct call.
"""
import numpy as np

from ._accel import BACKEND
from .geometry import EXACT_TOL
from .kernels import (
    cart_to_susp_batch,
    phi_forward_batch,
    phi_inverse_batch,
    reflect_batch,
    susp_to_cart_batch,
)
from .polygon import ModuliSpec
from .sphere import sample_uniform_batch

ROUNDTRIP_LIMIT = 1e-8
EQUIVARIANCE_LIMIT = 1e-9
VALIDITY_LIMIT = 1e-8


def polygon_errors(n, r, V):
    """Per-polygon worst deviations: ``(endpoint, edge, bound)`` where
    ``bound`` is the largest excursion outside the triangle bounds."""
    end = np.maximum(np.hypot(*V[:, 0].T), np.hypot(V[:, -1, 0] - r, V[:, -1, 1]))
    edges = np.hypot(*np.diff(V, axis=1).transpose(2, 0, 1))
    edge = np.abs(edges - 1.0).max(axis=1)
    dist = np.hypot(V[:, :-1, 0] - r, V[:, :-1, 1])
    i = np.arange(n - 1)
    lo = (n - 2 - i) - dist
    hi = dist - (n - 1 - i)
    bound = np.maximum(lo, hi).max(axis=1).clip(min=0.0)
    return end, edge, bound


def tail_indices(n, r, V, tol):
    """Batch version of :func:`polysphere.polygon.tail_index`."""
    dist = np.hypot(V[:, 1 : n - 1, 0] - r, V[:, 1 : n - 1, 1])
    hit = np.abs(dist - (n - 2 - np.arange(n - 2))) <= tol
    return np.where(hit.any(axis=1), hit.argmax(axis=1) + 1, 0)


def sample_chain(spec: ModuliSpec, count: int, seed: int, tol: float = EXACT_TOL):
    """Run sphere -> polygon -> sphere -> polygon on ``count`` samples.

    Returns a dict of arrays: ``X`` (samples), ``V`` (polygons), ``X2``
    (forward images), ``V2`` (polygons rebuilt from the images), ``Xr``
    (images of the reflected polygons), ``i0`` and ``j0`` (termination index
    of the sample and of the forward image).
    """
    n, r = spec.n, spec.r
    X = sample_uniform_batch(spec, seed, count)
    T, i0 = cart_to_susp_batch(X, tol)
    V = phi_inverse_batch(n, r, T, i0)
    T2, j0 = phi_forward_batch(n, r, V, tol)
    X2 = susp_to_cart_batch(T2, j0)
    V2 = phi_inverse_batch(n, r, T2, j0)
    Tr, k0 = phi_forward_batch(n, r, reflect_batch(V), tol)
    Xr = susp_to_cart_batch(Tr, k0)
    return {"X": X, "V": V, "X2": X2, "V2": V2, "Xr": Xr, "i0": i0, "j0": j0}


def run_checks(spec: ModuliSpec, count: int, seed: int, tol: float = EXACT_TOL) -> dict:
    """Summary of max errors over ``count`` seeded samples."""
    c = sample_chain(spec, count, seed, tol)
    n, r = spec.n, spec.r
    end, edge, bound = polygon_errors(n, r, c["V"])
    sphere_rt = float(np.abs(c["X2"] - c["X"]).max())
    polygon_rt = float(np.hypot(*(c["V2"] - c["V"]).transpose(2, 0, 1)).max())
    equiv = float(np.abs(c["Xr"] + c["X2"]).max())
    tails = tail_indices(n, r, c["V"], tol)
    summary = {
        "backend": BACKEND,
        "n": n,
        "r": r,
        "count": count,
        "seed": seed,
        "tol": tol,
        "max_sphere_roundtrip_error": sphere_rt,
        "max_polygon_roundtrip_error": polygon_rt,
        "max_equivariance_error": equiv,
        "max_endpoint_error": float(end.max()),
        "max_edge_error": float(edge.max()),
        "max_triangle_bound_excess": float(bound.max()),
        "i0_mismatches": int(np.count_nonzero(c["j0"] != c["i0"])),
        "tail_index_mismatches": int(np.count_nonzero(tails != c["j0"])),
    }
    summary["pass"] = bool(
        sphere_rt < ROUNDTRIP_LIMIT
        and polygon_rt < ROUNDTRIP_LIMIT
        and equiv < EQUIVARIANCE_LIMIT
        and max(summary["max_endpoint_error"], summary["max_edge_error"], summary["max_triangle_bound_excess"])
        < VALIDITY_LIMIT
        and summary["tail_index_mismatches"] == 0
    )
    return summary
