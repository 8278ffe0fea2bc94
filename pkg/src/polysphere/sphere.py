"""Two models of the sphere ``S^{n-3}``.

Suspension coordinates ``t = (t_1, ..., t_{n-2})`` in ``[-1, 1]`` describe a
point of the iterated unreduced suspension of ``S^0``: only the entries up to
and including the first one equal to ``+-1`` matter. Cartesian coordinates
are ordinary unit vectors in ``R^{n-2}``, held as 1-d float arrays.

The conversions are

    x_i = t_i * prod_{j<i} sqrt(1 - t_j**2)
    t_i = x_i / sqrt(1 - x_1**2 - ... - x_{i-1}**2)

and the antipodal map is negation in either model.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AntipodalEndpoints, DimensionMismatch, InvalidCoords, NotUnit
from .geometry import DEFAULT_TOL

# largest float below 1; non-terminal coordinates must stay strictly inside
BELOW_ONE = 1.0 - 2.0**-53

__all__ = [
    "SuspensionCoords",
    "susp_to_cart",
    "cart_to_susp",
    "susp_equiv",
    "antipode",
    "negate",
    "projective_canonical",
    "sphere_angle",
    "slerp",
    "sample_uniform",
    "sample_uniform_batch",
]


@dataclass(frozen=True, eq=False)
class SuspensionCoords:
    """Coordinates ``t`` (length ``n - 2``) with 1-based termination index
    ``i0``: ``|t_i| < 1`` before ``i0`` and ``|t_{i0}| == 1``. Entries after
    ``i0`` are ignored; :meth:`canonical` zeroes them."""

    n: int
    t: tuple
    i0: int = field(default=0)

    def __post_init__(self):
        t = tuple(float(v) for v in self.t)
        object.__setattr__(self, "t", t)
        if self.n < 4 or len(t) != self.n - 2:
            raise InvalidCoords(f"need n >= 4 and {self.n - 2} coordinates, got {len(t)}")
        if not all(math.isfinite(v) and -1.0 <= v <= 1.0 for v in t):
            raise InvalidCoords(f"coordinates must lie in [-1, 1]: {t}")
        first = next((k + 1 for k, v in enumerate(t) if abs(v) == 1.0), None)
        if first is None:
            raise InvalidCoords(f"no coordinate equals +-1: {t}")
        if self.i0 == 0:
            object.__setattr__(self, "i0", first)
        elif self.i0 != first:
            raise InvalidCoords(f"i0={self.i0} but first +-1 entry is at {first}")

    @classmethod
    def from_t(cls, t, tol: float = 0.0):
        """Build from raw values, snapping the first entry within ``tol`` of
        ``+-1`` to exactly ``+-1``."""
        t = [float(v) for v in t]
        for k, v in enumerate(t):
            if abs(v) >= 1.0 - tol:
                if abs(v) > 1.0 + tol:
                    raise InvalidCoords(f"t_{k + 1}={v!r} outside [-1, 1]")
                t[k] = math.copysign(1.0, v)
                break
        return cls(len(t) + 2, tuple(t))

    @property
    def sign(self) -> float:
        return self.t[self.i0 - 1]

    def canonical(self) -> "SuspensionCoords":
        t = self.t[: self.i0] + (0.0,) * (len(self.t) - self.i0)
        return SuspensionCoords(self.n, t, self.i0)

    def __neg__(self):
        return SuspensionCoords(self.n, tuple(-v + 0.0 for v in self.t), self.i0)

    def __eq__(self, other):
        if not isinstance(other, SuspensionCoords):
            return NotImplemented
        return self.n == other.n and self.i0 == other.i0 and self.t == other.t

    def __hash__(self):
        return hash((self.n, self.i0, self.t))

    def as_array(self) -> np.ndarray:
        return np.array(self.t)


def negate(s: SuspensionCoords) -> SuspensionCoords:
    return -s


def susp_to_cart(s: SuspensionCoords) -> np.ndarray:
    x = np.zeros(len(s.t))
    scale = 1.0
    for k in range(s.i0):
        tk = s.t[k]
        x[k] = tk * scale
        scale *= math.sqrt(max((1.0 - tk) * (1.0 + tk), 0.0))
    return x


def _check_unit(v, tol):
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise DimensionMismatch(f"expected a vector of length >= 2, got shape {v.shape}")
    err = abs(float(v @ v) - 1.0)
    if not math.isfinite(err) or err > tol:
        raise NotUnit(f"|x|^2 differs from 1 by {err:.3e}")
    return v


def cart_to_susp(v, tol: float = DEFAULT_TOL) -> SuspensionCoords:
    """Inverse of :func:`susp_to_cart`.

    The denominators ``sqrt(1 - x_1**2 - ... - x_{i-1}**2)`` are evaluated as
    the norm of the remaining entries ``(x_i, ..., x_{n-2})``, which equals it
    on the sphere and keeps full precision when the partial sum nears 1.
    ``i0`` is the first index ``i`` with ``sqrt(1 - t_i**2) <= tol``, i.e.
    where the norm after ``x_i`` is at most ``tol`` times the norm from
    ``x_i`` on. The test is relative so that long runs of ``|t_j|`` close to
    1, whose product shrinks the remaining norm, do not end the walk early.
    """
    v = _check_unit(v, tol)
    m = v.size
    # suffix[k] = |(x_k, ..., x_{m-1})|, computed from the end
    suffix = np.sqrt(np.cumsum((v * v)[::-1])[::-1])
    t = [0.0] * m
    for k in range(m):
        rest = suffix[k + 1] if k + 1 < m else 0.0
        if rest <= tol * suffix[k]:
            t[k] = 1.0 if v[k] >= 0 else -1.0
            return SuspensionCoords(m + 2, tuple(t), k + 1)
        t[k] = min(BELOW_ONE, max(-BELOW_ONE, float(v[k] / suffix[k])))
    raise AssertionError("unreachable: the last remaining norm is zero")


def susp_equiv(a: SuspensionCoords, b: SuspensionCoords, tol: float = DEFAULT_TOL) -> bool:
    """Equality of suspension points: same ``i0``, same sign there, and
    agreeing earlier entries."""
    if a.n != b.n:
        raise DimensionMismatch(f"n differs: {a.n} vs {b.n}")
    if a.i0 != b.i0 or a.sign != b.sign:
        return False
    return all(abs(x - y) <= tol for x, y in zip(a.t[: a.i0 - 1], b.t[: b.i0 - 1]))


def antipode(v) -> np.ndarray:
    return -np.asarray(v, dtype=float)


def projective_canonical(v, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Representative of ``{v, -v}`` whose first entry larger than ``tol``
    in magnitude is positive."""
    v = np.asarray(v, dtype=float)
    big = np.flatnonzero(np.abs(v) > tol)
    if big.size and v[big[0]] < 0:
        return -v
    return v.copy()


def sphere_angle(u, v) -> float:
    """Angle between unit vectors as ``atan2(|v - (u.v) u|, u.v)``."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    dot = float(u @ v)
    rej = v - dot * u
    return math.atan2(float(np.sqrt(rej @ rej)), dot)


def slerp(u, v, s: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Constant-speed great-circle interpolation from ``u`` (s=0) to ``v`` (s=1)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise DimensionMismatch(f"shapes differ: {u.shape} vs {v.shape}")
    theta = sphere_angle(u, v)
    if theta >= math.pi - tol:
        raise AntipodalEndpoints(f"endpoints are antipodal (angle {theta!r})")
    if s == 0.0 or theta == 0.0:
        return u.copy()
    if s == 1.0:
        return v.copy()
    w = v - float(u @ v) * u
    w /= np.sqrt(w @ w)
    out = math.cos(s * theta) * u + math.sin(s * theta) * w
    return out / np.sqrt(out @ out)


def sample_uniform_batch(spec, seed: int, count: int) -> np.ndarray:
    """``count`` uniform points of ``S^{n-3}`` as rows, from normalized
    standard normals."""
    g = np.random.default_rng(seed).standard_normal((count, spec.n - 2))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def sample_uniform(spec, seed: int) -> np.ndarray:
    return sample_uniform_batch(spec, seed, 1)[0]
