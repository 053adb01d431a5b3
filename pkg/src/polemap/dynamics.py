"""The quadratic pole map and its orbit machinery.

For a unit pole p, the map sends an ambient point x to

    2 (x . p) x - p.

It preserves the unit sphere and the closed unit disk, acts as angle
doubling on every great circle through p (measured from p), and fixes p.
This module evaluates the map, iterates it with per-step diagnostics,
inverts it in closed form on the sphere and in the open disk, and exposes
the one-dimensional factors (logistic conjugacy on the interval, Chebyshev
projection onto the p-axis) plus the rotation equivariance identity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePair, DimensionMismatch, NoPreimage, NotInterior
from .geometry import (
    DEGENERATE_TOL,
    UNIT_TOL,
    as_vector,
    deterministic_orthogonal,
    orthonormal_complement,
    require_same_dim,
    rotation_matrix,
    sphere_point,
)

RENORMALIZE_POLICIES = ("off", "every-step")


def pole_map(p, x) -> np.ndarray:
    """Evaluate 2 (x . p) x - p.

    Unit x stays unit; x inside the disk stays inside the disk.
    """
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    if p.ndim != 1 or p.shape != x.shape:
        raise DimensionMismatch(f"dimension mismatch: {p.shape} vs {x.shape}")
    norm_err = abs(math.sqrt(float(np.dot(p, p))) - 1.0)  # nan-propagating, so this
    if not norm_err <= UNIT_TOL:                           # also rejects non-finite poles
        raise ValueError(f"pole must be a unit vector: |norm - 1| = {norm_err:.3e}")
    t = float(np.dot(x, p))
    if not math.isfinite(t) or not np.all(np.isfinite(x)):
        raise ValueError("coordinates must be finite")
    return 2.0 * t * x - p


def pole_map_rows(p, xs) -> np.ndarray:
    """Apply the map to every row of an (n, d) array at once."""
    p = sphere_point(p)
    xs = np.asarray(xs, dtype=float)
    t = xs @ p
    return 2.0 * t[:, None] * xs - p


@dataclass
class Orbit:
    """A finite iterate sequence with per-step diagnostics.

    ``norm_drift[k]`` is | ||x_k|| - 1 | of the stored point; with
    renormalization on it stays at rounding level.  ``slice_residual[k]``
    is the distance of x_k from span(p, x_0), which the map preserves.
    """

    points: np.ndarray
    norm_drift: np.ndarray
    slice_residual: np.ndarray

    def __post_init__(self):
        if len(self.points) == 0:
            raise ValueError("an orbit holds at least its starting point")
        if len(self.norm_drift) != len(self.points) or len(self.slice_residual) != len(self.points):
            raise ValueError("diagnostic sequences must match the orbit length")

    @property
    def steps(self) -> int:
        return len(self.points) - 1

    @property
    def final(self) -> np.ndarray:
        return self.points[-1]

    @property
    def max_norm_drift(self) -> float:
        return float(np.max(self.norm_drift))

    @property
    def max_slice_residual(self) -> float:
        return float(np.max(self.slice_residual))


def iterate(p, x0, steps: int, renormalize: str = "every-step") -> Orbit:
    """Iterate the pole map ``steps`` times from x0.

    ``renormalize="every-step"`` re-projects each new point onto the unit
    sphere, which keeps long sphere orbits on-manifold without changing the
    dynamics; use ``"off"`` for disk orbits.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if renormalize not in RENORMALIZE_POLICIES:
        raise ValueError(f"renormalize must be one of {RENORMALIZE_POLICIES}")
    p = sphere_point(p)
    x0 = as_vector(x0)
    require_same_dim(p, x0)

    n0 = float(np.linalg.norm(x0))
    if n0 < DEGENERATE_TOL:
        w = None
    else:
        try:
            w = orthonormal_complement(p, x0 / n0)
        except DegeneratePair:
            w = None  # x0 parallel to p: the invariant span is the p-axis

    points = np.empty((steps + 1, p.size))
    drift = np.empty(steps + 1)
    residual = np.empty(steps + 1)
    x = x0.copy()
    for k in range(steps + 1):
        points[k] = x
        drift[k] = abs(float(np.linalg.norm(x)) - 1.0)
        r = x - float(np.dot(x, p)) * p
        if w is not None:
            r = r - float(np.dot(x, w)) * w
        residual[k] = float(np.linalg.norm(r))
        if k < steps:
            x = 2.0 * float(np.dot(x, p)) * x - p
            if renormalize == "every-step":
                x = x / float(np.linalg.norm(x))
    return Orbit(points, drift, residual)


def preimage_on_sphere(p, y) -> np.ndarray:
    """A unit x with pole_map(p, x) = y.

    For y away from -p this is the normalized midpoint direction
    (y + p) / ||y + p||.  For y = -p any direction orthogonal to p works;
    the deterministic choice of :func:`deterministic_orthogonal` is
    returned so results are reproducible.  On the 0-sphere {+1, -1} the
    point -p has no preimage at all.
    """
    p = sphere_point(p)
    y = sphere_point(y)
    require_same_dim(p, y)
    w = y + p
    n = float(np.linalg.norm(w))
    if n < DEGENERATE_TOL:
        if p.size == 1:
            raise NoPreimage("on the 0-sphere the antipode of the pole is never reached")
        return deterministic_orthogonal(p)
    return w / n


def preimage_in_disk(p, y) -> np.ndarray:
    """The interior x with pole_map(p, x) = y, for ||y|| < 1.

    x = a (y + p) / ||y + p||  with  a = sqrt((1 + ||y||^2 + 2 y.p) / (2 y.p + 2)),
    and ||x|| = a < 1.  Targets within 1e-9 of the unit sphere are rejected:
    the scaling denominator degenerates there.
    """
    p = sphere_point(p)
    y = as_vector(y)
    require_same_dim(p, y)
    ny = float(np.linalg.norm(y))
    if ny > 1.0 - DEGENERATE_TOL:
        raise NotInterior(f"target must lie strictly inside the unit disk, got norm {ny:.12f}")
    yp = float(np.dot(y, p))
    a = np.sqrt((1.0 + ny * ny + 2.0 * yp) / (2.0 * yp + 2.0))
    w = y + p
    return a * w / float(np.linalg.norm(w))


def interval_conjugacy(p, x):
    """Pull the interval dynamics back to [0, 1] through the affine change
    of coordinates h(x) = -2x+1 (pole +1) or 2x-1 (pole -1).

    Returns h^{-1}(pole_map(p, h(x))), which equals the logistic value
    4 x (1 - x).  Accepts a scalar or an ndarray of grid points.
    """
    if p not in (1, -1):
        raise ValueError("the 0-sphere pole must be +1 or -1")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0) or np.any(x > 1.0):
        raise ValueError("interval coordinates must lie in [0, 1]")
    if p == 1:
        h = -2.0 * x + 1.0
        fh = 2.0 * h * h - 1.0
        out = (1.0 - fh) / 2.0
    else:
        h = 2.0 * x - 1.0
        fh = -2.0 * h * h + 1.0
        out = (fh + 1.0) / 2.0
    return out if out.ndim else float(out)


def chebyshev_projection(p, x) -> float:
    """Coordinate t = x . p of x along the pole axis.

    One map step sends t to 2 t^2 - 1 regardless of the rest of x, so this
    projection intertwines the ambient dynamics with the degree-2 Chebyshev
    map on [-1, 1].
    """
    p = sphere_point(p)
    x = as_vector(x)
    require_same_dim(p, x)
    return float(np.dot(x, p))


def chebyshev_step(t):
    """The interval factor map t -> 2 t^2 - 1 (scalar or ndarray)."""
    return 2.0 * t * t - 1.0


def equivariance_pair(rotation, p, x) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the identity map_{Rp}(Rx) = R map_p(x).

    Returns (pole_map(Rp, Rx), R @ pole_map(p, x)); any proper rotation R
    makes the two equal, which is what lets an arbitrary pole be rotated
    onto a coordinate axis without changing the dynamics.
    """
    r = rotation_matrix(rotation)
    p = sphere_point(p)
    x = as_vector(x)
    require_same_dim(p, x)
    if r.shape[0] != p.size:
        raise ValueError(f"rotation acts on R^{r.shape[0]}, points live in R^{p.size}")
    return pole_map(r @ p, r @ x), r @ pole_map(p, x)
