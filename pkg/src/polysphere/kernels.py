"""Batch kernels for the sphere conversions and the polygon map.

Each operation has a numba kernel that loops sample by sample and a numpy
version that loops over vertex index and vectorizes across samples. The
public ``*_batch`` functions dispatch on :data:`polysphere._accel.USE_NUMBA`;
both implementations stay importable for the benchmark and the
cross-backend tests.

Array conventions: ``T`` and ``X`` have shape ``(m, n - 2)``, ``i0`` is an
int64 array of 1-based termination indices, polygons are ``(m, n, 2)``.
"""
import math

import numpy as np

from ._accel import USE_NUMBA, njit
from .errors import InconsistentGeometry, InvalidCoords
from .sphere import BELOW_ONE

# status codes returned by the forward kernels
OK = 0
OFF_CIRCLE = 1
OUTSIDE_ARC = 2
NO_TERMINATION = 3
BAD_ARC = 4

_STATUS_TEXT = {
    OFF_CIRCLE: "vertex is off its unit circle",
    OUTSIDE_ARC: "vertex lies outside the admissible arc",
    NO_TERMINATION: "no vertex attains its far bound",
    BAD_ARC: "unit circle does not meet the constraint disk",
}


# -- numba kernels ------------------------------------------------------------


@njit
def _half_angle(d, radius):
    one_minus = (radius - d + 1.0) * (radius + d - 1.0)
    one_plus = (d + 1.0 - radius) * (d + 1.0 + radius)
    if one_minus < 0.0:
        one_minus = 0.0
    if one_plus < 0.0:
        one_plus = 0.0
    return 2.0 * math.atan2(math.sqrt(one_minus), math.sqrt(one_plus))


@njit
def _wrap(a):
    if a > math.pi:
        a -= 2.0 * math.pi
    elif a <= -math.pi:
        a += 2.0 * math.pi
    return a


@njit
def susp_to_cart_nb(T, i0):
    m, k = T.shape
    X = np.zeros((m, k))
    for s in range(m):
        scale = 1.0
        for j in range(i0[s]):
            tj = T[s, j]
            X[s, j] = tj * scale
            f = (1.0 - tj) * (1.0 + tj)
            scale *= math.sqrt(f) if f > 0.0 else 0.0
    return X


@njit
def cart_to_susp_nb(X, tol):
    m, k = X.shape
    T = np.zeros((m, k))
    i0 = np.zeros(m, dtype=np.int64)
    suffix = np.zeros(k + 1)
    for s in range(m):
        suffix[k] = 0.0
        acc = 0.0
        for j in range(k - 1, -1, -1):
            acc += X[s, j] * X[s, j]
            suffix[j] = math.sqrt(acc)
        for j in range(k):
            if suffix[j + 1] <= tol * suffix[j]:
                T[s, j] = 1.0 if X[s, j] >= 0.0 else -1.0
                i0[s] = j + 1
                break
            t = X[s, j] / suffix[j]
            T[s, j] = min(BELOW_ONE, max(-BELOW_ONE, t))
    return T, i0


@njit
def phi_inverse_nb(n, r, T, i0):
    m = T.shape[0]
    V = np.zeros((m, n, 2))
    for s in range(m):
        V[s, n - 1, 0] = r
        cx = 0.0
        cy = 0.0
        last = i0[s]
        for i in range(1, last + 1):
            radius = n - 1.0 - i
            dx = r - cx
            dy = -cy
            d = math.hypot(dx, dy)
            a = math.atan2(dy, dx) + T[s, i - 1] * _half_angle(d, radius)
            cx += math.cos(a)
            cy += math.sin(a)
            V[s, i, 0] = cx
            V[s, i, 1] = cy
        steps = n - 1.0 - last
        if steps > 0.0:
            ux = (r - cx) / steps
            uy = -cy / steps
            for i in range(last + 1, n - 1):
                V[s, i, 0] = cx + (i - last) * ux
                V[s, i, 1] = cy + (i - last) * uy
    return V


@njit
def phi_forward_nb(n, r, V, tol):
    m = V.shape[0]
    T = np.zeros((m, n - 2))
    i0 = np.zeros(m, dtype=np.int64)
    status = np.zeros(m, dtype=np.int64)
    for s in range(m):
        status[s] = NO_TERMINATION
        for i in range(1, n - 1):
            radius = n - 1.0 - i
            cx = V[s, i - 1, 0]
            cy = V[s, i - 1, 1]
            px = V[s, i, 0]
            py = V[s, i, 1]
            dx = r - cx
            dy = -cy
            d = math.hypot(dx, dy)
            if d > radius + 1.0 + tol or d < radius - 1.0 - tol or d <= tol:
                status[s] = BAD_ARC
                break
            if abs(math.hypot(px - cx, py - cy) - 1.0) > tol:
                status[s] = OFF_CIRCLE
                break
            half = _half_angle(d, radius)
            off = _wrap(math.atan2(py - cy, px - cx) - math.atan2(dy, dx))
            if abs(math.hypot(r - px, py) - radius) <= tol:
                T[s, i - 1] = 1.0 if off >= 0.0 else -1.0
                i0[s] = i
                status[s] = OK
                break
            if abs(off) > half + tol:
                status[s] = OUTSIDE_ARC
                break
            t = off / half
            T[s, i - 1] = min(1.0, max(-1.0, t))
    return T, i0, status


# -- numpy versions -----------------------------------------------------------


def _half_angle_np(d, radius):
    one_minus = np.maximum((radius - d + 1.0) * (radius + d - 1.0), 0.0)
    one_plus = np.maximum((d + 1.0 - radius) * (d + 1.0 + radius), 0.0)
    return 2.0 * np.arctan2(np.sqrt(one_minus), np.sqrt(one_plus))


def _wrap_np(a):
    a = np.where(a > np.pi, a - 2.0 * np.pi, a)
    return np.where(a <= -np.pi, a + 2.0 * np.pi, a)


def susp_to_cart_np(T, i0):
    m, k = T.shape
    X = np.zeros((m, k))
    scale = np.ones(m)
    for j in range(k):
        live = j < i0
        tj = T[:, j]
        X[:, j] = np.where(live, tj * scale, 0.0)
        scale = scale * np.sqrt(np.maximum((1.0 - tj) * (1.0 + tj), 0.0))
    return X


def cart_to_susp_np(X, tol):
    m, k = X.shape
    suffix = np.zeros((m, k + 1))
    suffix[:, :k] = np.sqrt(np.cumsum((X * X)[:, ::-1], axis=1)[:, ::-1])
    T = np.zeros((m, k))
    i0 = np.zeros(m, dtype=np.int64)
    for j in range(k):
        live = i0 == 0
        stop = live & (suffix[:, j + 1] <= tol * suffix[:, j])
        go = live & ~stop
        T[stop, j] = np.where(X[stop, j] >= 0.0, 1.0, -1.0)
        i0[stop] = j + 1
        T[go, j] = np.clip(X[go, j] / suffix[go, j], -BELOW_ONE, BELOW_ONE)
    return T, i0


def phi_inverse_np(n, r, T, i0):
    m = T.shape[0]
    V = np.zeros((m, n, 2))
    V[:, n - 1, 0] = r
    for i in range(1, n - 1):
        live = i <= i0
        c = V[live, i - 1]
        dx = r - c[:, 0]
        dy = -c[:, 1]
        d = np.hypot(dx, dy)
        a = np.arctan2(dy, dx) + T[live, i - 1] * _half_angle_np(d, n - 1.0 - i)
        V[live, i, 0] = c[:, 0] + np.cos(a)
        V[live, i, 1] = c[:, 1] + np.sin(a)
    idx = np.arange(m)
    head = V[idx, i0]
    steps = (n - 1.0 - i0)[:, None]
    unit = (V[:, n - 1] - head) / steps
    for i in range(2, n - 1):
        tail = i > i0
        V[tail, i] = head[tail] + (i - i0[tail])[:, None] * unit[tail]
    return V


def phi_forward_np(n, r, V, tol):
    m = V.shape[0]
    T = np.zeros((m, n - 2))
    i0 = np.zeros(m, dtype=np.int64)
    status = np.full(m, NO_TERMINATION, dtype=np.int64)
    live = np.ones(m, dtype=bool)
    for i in range(1, n - 1):
        if not live.any():
            break
        radius = n - 1.0 - i
        c = V[:, i - 1]
        p = V[:, i]
        dx = r - c[:, 0]
        dy = -c[:, 1]
        d = np.hypot(dx, dy)
        bad_arc = live & ((d > radius + 1.0 + tol) | (d < radius - 1.0 - tol) | (d <= tol))
        status[bad_arc] = BAD_ARC
        live &= ~bad_arc
        off_circle = live & (np.abs(np.hypot(p[:, 0] - c[:, 0], p[:, 1] - c[:, 1]) - 1.0) > tol)
        status[off_circle] = OFF_CIRCLE
        live &= ~off_circle

        half = _half_angle_np(d, radius)
        off = _wrap_np(np.arctan2(p[:, 1] - c[:, 1], p[:, 0] - c[:, 0]) - np.arctan2(dy, dx))
        stop = live & (np.abs(np.hypot(r - p[:, 0], p[:, 1]) - radius) <= tol)
        T[stop, i - 1] = np.where(off[stop] >= 0.0, 1.0, -1.0)
        i0[stop] = i
        status[stop] = OK
        live &= ~stop

        outside = live & (np.abs(off) > half + tol)
        status[outside] = OUTSIDE_ARC
        live &= ~outside
        T[live, i - 1] = np.clip(off[live] / half[live], -1.0, 1.0)
    return T, i0, status


# -- dispatch -----------------------------------------------------------------

if USE_NUMBA:
    _susp_to_cart = susp_to_cart_nb
    _cart_to_susp = cart_to_susp_nb
    _phi_inverse = phi_inverse_nb
    _phi_forward = phi_forward_nb
else:
    _susp_to_cart = susp_to_cart_np
    _cart_to_susp = cart_to_susp_np
    _phi_inverse = phi_inverse_np
    _phi_forward = phi_forward_np


def _coords(T, i0):
    T = np.ascontiguousarray(T, dtype=np.float64)
    i0 = np.ascontiguousarray(i0, dtype=np.int64)
    if T.ndim != 2 or i0.shape != (T.shape[0],):
        raise InvalidCoords(f"shape mismatch: T {T.shape}, i0 {i0.shape}")
    if np.any(i0 < 1) or np.any(i0 > T.shape[1]):
        raise InvalidCoords("i0 outside [1, n-2]")
    head = np.arange(T.shape[1]) < i0[:, None]
    if np.any(np.abs(T[head]) > 1.0):
        raise InvalidCoords("coordinate outside [-1, 1]")
    return T, i0


def susp_to_cart_batch(T, i0):
    T, i0 = _coords(T, i0)
    return _susp_to_cart(T, i0)


def cart_to_susp_batch(X, tol=1e-9):
    """Returns ``(T, i0)`` with canonical zero tails. Rows must be unit."""
    X = np.ascontiguousarray(X, dtype=np.float64)
    return _cart_to_susp(X, float(tol))


def phi_inverse_batch(n, r, T, i0):
    """Polygons ``(m, n, 2)`` for suspension coordinates ``(T, i0)``."""
    T, i0 = _coords(T, i0)
    if T.shape[1] != n - 2:
        raise InvalidCoords(f"expected {n - 2} coordinates per row, got {T.shape[1]}")
    return _phi_inverse(int(n), float(r), T, i0)


def phi_forward_batch(n, r, V, tol=1e-9, check=True):
    """Suspension coordinates ``(T, i0)`` of polygons ``V``.

    With ``check`` set, any row whose geometry is inconsistent raises
    :class:`InconsistentGeometry`; otherwise the per-row status array is
    returned as a third value.
    """
    V = np.ascontiguousarray(V, dtype=np.float64)
    T, i0, status = _phi_forward(int(n), float(r), V, float(tol))
    if not check:
        return T, i0, status
    bad = np.flatnonzero(status != OK)
    if bad.size:
        row = int(bad[0])
        raise InconsistentGeometry(
            f"{bad.size} polygon(s) rejected; row {row}: {_STATUS_TEXT[int(status[row])]}"
        )
    return T, i0


def reflect_batch(V):
    return V * np.array([1.0, -1.0])
