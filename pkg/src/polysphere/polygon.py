"""Polygons with ``n - 1`` unit sides and one side of length ``r``.

Vertices are stored in the canonical position ``x_0 = (0, 0)`` and
``x_{n-1} = (r, 0)``. Sides may cross one another.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidSpec, TailNotFound, WrongArity
from .geometry import DEFAULT_TOL

__all__ = [
    "ModuliSpec",
    "PolygonConfig",
    "Violation",
    "validate",
    "reflect",
    "tail_index",
]


@dataclass(frozen=True)
class ModuliSpec:
    """The pair ``(n, r)``; requires ``n >= 4`` and ``n - 2 <= r < n - 1``."""

    n: int
    r: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise InvalidSpec(f"n must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "r", float(self.r))
        if self.n < 4:
            raise InvalidSpec(f"n={self.n} unsupported; need n >= 4")
        if not math.isfinite(self.r) or not (self.n - 2 <= self.r < self.n - 1):
            raise InvalidSpec(
                f"r={self.r!r} outside [{self.n - 2}, {self.n - 1}) for n={self.n}"
            )

    @property
    def dim(self) -> int:
        """Number of sphere coordinates, ``n - 2``."""
        return self.n - 2

    @property
    def target(self):
        return (self.r, 0.0)


@dataclass(frozen=True, eq=False)
class PolygonConfig:
    spec: ModuliSpec
    vertices: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise WrongArity(f"vertices must have shape (n, 2), got {v.shape}")
        if v.shape[0] != self.spec.n:
            raise WrongArity(f"expected {self.spec.n} vertices, got {v.shape[0]}")
        v.flags.writeable = False
        object.__setattr__(self, "vertices", v)

    @property
    def n(self) -> int:
        return self.spec.n

    def __eq__(self, other):
        if not isinstance(other, PolygonConfig):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.vertices, other.vertices)

    def __repr__(self):
        pts = ", ".join(f"({x:.6g}, {y:.6g})" for x, y in self.vertices)
        return f"PolygonConfig(n={self.spec.n}, r={self.spec.r!r}, [{pts}])"

    def distances_to_end(self) -> np.ndarray:
        """``d(x_i, x_{n-1})`` for every vertex."""
        return np.hypot(self.vertices[:, 0] - self.spec.r, self.vertices[:, 1])

    def edge_lengths(self) -> np.ndarray:
        """Lengths of the ``n - 1`` unit edges ``x_{i-1} x_i``."""
        return np.hypot(*np.diff(self.vertices, axis=0).T)


@dataclass(frozen=True)
class Violation:
    """One failed invariant. ``index`` is the vertex index, or for ``edge``
    the index ``i`` of the edge ``x_{i-1} x_i``."""

    kind: str
    index: int
    measured: float
    bound: str

    def __str__(self):
        return f"{self.kind}[{self.index}]: measured {self.measured!r}, expected {self.bound}"


def validate(p: PolygonConfig, tol: float = DEFAULT_TOL) -> list:
    """Check fixed endpoints, unit edges, and the triangle bounds
    ``n-2-i <= d(x_i, x_{n-1}) <= n-1-i``. Returns a list of
    :class:`Violation`; empty means valid."""
    n, r = p.spec.n, p.spec.r
    v = p.vertices
    out = []
    bad = ~np.isfinite(v).all(axis=1)
    for i in np.flatnonzero(bad):
        out.append(Violation("non-finite", int(i), float("nan"), "finite coordinates"))
    if bad.any():
        return out

    err0 = float(np.hypot(*v[0]))
    if err0 > tol:
        out.append(Violation("endpoint", 0, err0, f"x_0 = (0, 0) within {tol}"))
    err_end = float(np.hypot(v[-1, 0] - r, v[-1, 1]))
    if err_end > tol:
        out.append(Violation("endpoint", n - 1, err_end, f"x_{n - 1} = ({r}, 0) within {tol}"))

    for i, length in enumerate(p.edge_lengths(), start=1):
        if abs(length - 1.0) > tol:
            out.append(Violation("edge", i, float(length), f"1 within {tol}"))

    dist = p.distances_to_end()
    for i in range(1, n - 1):
        if dist[i] <= tol:
            out.append(Violation("coincident", i, float(dist[i]), f"x_{i} distinct from x_{n - 1}"))
    for i in range(n - 1):
        lo, hi = n - 2 - i, n - 1 - i
        if dist[i] < lo - tol:
            out.append(Violation("lower-bound", i, float(dist[i]), f">= {lo}"))
        if dist[i] > hi + tol:
            out.append(Violation("upper-bound", i, float(dist[i]), f"<= {hi}"))
    return out


def reflect(p: PolygonConfig) -> PolygonConfig:
    """Mirror across the x-axis."""
    return PolygonConfig(p.spec, p.vertices * np.array([1.0, -1.0]))


def tail_index(p: PolygonConfig, tol: float = DEFAULT_TOL) -> int:
    """Least ``i >= 1`` with ``d(x_i, x_{n-1}) = n-1-i`` within ``tol``.

    From that vertex on the polygon is a straight, evenly spaced run of unit
    edges ending at ``x_{n-1}``.
    """
    n = p.spec.n
    dev = np.abs(p.distances_to_end()[1 : n - 1] - (n - 2 - np.arange(n - 2)))
    hits = np.flatnonzero(dev <= tol)
    if hits.size:
        return int(hits[0]) + 1
    k = int(np.argmin(dev))
    raise TailNotFound(
        f"no vertex attains its far bound within {tol}; closest is x_{k + 1} "
        f"off by {dev[k]:.3e}",
        index=k + 1,
        deviation=float(dev[k]),
    )
