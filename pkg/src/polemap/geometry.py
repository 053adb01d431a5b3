"""Dense vector algebra on the unit sphere and unit disk of R^d.

Points are plain 1-D float arrays.  The metric used everywhere in this
package is the Euclidean (chord) distance of the ambient space: it is
bi-Lipschitz equivalent to the geodesic metric on the sphere and much
cheaper to evaluate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePair, DimensionMismatch

# Validation tolerance for stored/loaded points vs. accuracy demanded of
# freshly computed values.  Long orbits accumulate drift, so the two differ.
UNIT_TOL = 1e-9
FRESH_TOL = 1e-12
# Below this norm a projected direction counts as zero.
DEGENERATE_TOL = 1e-9


def as_vector(coords) -> np.ndarray:
    """Coerce to a finite 1-D float array of length >= 1."""
    v = np.asarray(coords, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatch(f"expected a 1-D coordinate sequence, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("coordinates must be finite")
    return v


def require_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimension mismatch: {a.shape} vs {b.shape}")


def chord_distance(a, b) -> float:
    """Euclidean distance between two ambient points (the chord metric)."""
    a = as_vector(a)
    b = as_vector(b)
    require_same_dim(a, b)
    return float(np.linalg.norm(a - b))


def sphere_point(coords, tol: float = UNIT_TOL) -> np.ndarray:
    """Validate that ``coords`` is a unit vector, within ``tol``."""
    v = as_vector(coords)
    err = abs(float(np.linalg.norm(v)) - 1.0)
    if err > tol:
        raise ValueError(f"not a unit vector: |norm - 1| = {err:.3e} > {tol:.1e}")
    return v


def disk_point(coords, tol: float = UNIT_TOL) -> np.ndarray:
    """Validate that ``coords`` lies in the closed unit disk, within ``tol``."""
    v = as_vector(coords)
    n = float(np.linalg.norm(v))
    if n > 1.0 + tol:
        raise ValueError(f"not inside the unit disk: norm = {n:.12f}")
    return v


def normalized(v: np.ndarray) -> np.ndarray:
    n = float(np.linalg.norm(v))
    if n < DEGENERATE_TOL:
        raise DegeneratePair("cannot normalize a near-zero vector")
    return v / n


def orthonormal_complement(p, q, threshold: float = DEGENERATE_TOL) -> np.ndarray:
    """Unit vector w with w.p = 0 and q in span(p, w).

    Computed by orthogonalizing q against p:  w = (q - (p.q) p) / ||...||.
    Raises DegeneratePair when q is within ``threshold`` of +/-p, where the
    numerator vanishes.
    """
    p = sphere_point(p)
    q = sphere_point(q)
    require_same_dim(p, q)
    w = q - float(np.dot(p, q)) * p
    n = float(np.linalg.norm(w))
    if n < threshold:
        raise DegeneratePair("q is numerically parallel to p; no orthogonal direction is determined")
    return w / n


def deterministic_orthogonal(p) -> np.ndarray:
    """A reproducible unit vector orthogonal to p.

    Takes the first standard basis vector least aligned with p and
    orthogonalizes it.  Total for ambient dimension >= 2.
    """
    p = sphere_point(p)
    if p.size < 2:
        raise DegeneratePair("R^1 contains no direction orthogonal to a unit vector")
    i = int(np.argmin(np.abs(p)))
    e = np.zeros(p.size)
    e[i] = 1.0
    w = e - p[i] * p
    return w / float(np.linalg.norm(w))


@dataclass(frozen=True)
class SliceFrame:
    """Ordered orthonormal pair (pole, complement) spanning a 2-plane.

    The circle {cos(t) pole + sin(t) complement} is the slice circle of the
    frame; the pole sits at slice angle 0.
    """

    pole: np.ndarray
    complement: np.ndarray

    def __post_init__(self):
        p = sphere_point(self.pole)
        w = sphere_point(self.complement)
        require_same_dim(p, w)
        if abs(float(np.dot(p, w))) > UNIT_TOL:
            raise ValueError("frame vectors are not orthogonal")

    @property
    def dim(self) -> int:
        return self.pole.size


def slice_frame(p, q) -> SliceFrame:
    """Frame whose slice circle passes through q."""
    return SliceFrame(sphere_point(p), orthonormal_complement(p, q))


def frame_through(p, x) -> SliceFrame:
    """Like :func:`slice_frame`, but with a deterministic fallback direction
    when x is numerically (anti)parallel to p."""
    try:
        return slice_frame(p, x)
    except DegeneratePair:
        return SliceFrame(sphere_point(p), deterministic_orthogonal(p))


def slice_embed(frame: SliceFrame, theta: float) -> np.ndarray:
    """Point of the slice circle at angle ``theta`` (float radians)."""
    return np.cos(theta) * frame.pole + np.sin(theta) * frame.complement


def slice_angle(frame: SliceFrame, x) -> float:
    """Angle in [0, 2*pi) of the projection of x onto the frame's plane.

    Inverse of :func:`slice_embed` for points on the slice circle.
    """
    x = as_vector(x)
    require_same_dim(x, frame.pole)
    return float(np.arctan2(np.dot(x, frame.complement), np.dot(x, frame.pole)) % (2.0 * np.pi))


def slice_residual(frame: SliceFrame, x) -> float:
    """Distance of x from the plane spanned by the frame."""
    x = as_vector(x)
    require_same_dim(x, frame.pole)
    r = x - float(np.dot(x, frame.pole)) * frame.pole - float(np.dot(x, frame.complement)) * frame.complement
    return float(np.linalg.norm(r))


def rotation_matrix(m, tol: float = UNIT_TOL) -> np.ndarray:
    """Validate that ``m`` is a proper rotation (orthogonal, det = 1)."""
    r = np.asarray(m, dtype=float)
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise DimensionMismatch(f"rotation must be square, got shape {r.shape}")
    ortho_err = float(np.max(np.abs(r.T @ r - np.eye(r.shape[0]))))
    det_err = abs(float(np.linalg.det(r)) - 1.0)
    if ortho_err > tol or det_err > tol:
        raise ValueError(f"not a proper rotation: orthogonality error {ortho_err:.3e}, det error {det_err:.3e}")
    return r


def _householder(v: np.ndarray) -> np.ndarray:
    u = v / float(np.linalg.norm(v))
    return np.eye(v.size) - 2.0 * np.outer(u, u)


def rotate_pole_to_axis(p) -> np.ndarray:
    """Proper rotation R with R p = e1 (first standard basis vector).

    Built from two Householder reflections; the reflection axes are chosen
    with norm >= sqrt(2), so the construction is stable for p near +/-e1.
    """
    p = sphere_point(p)
    d = p.size
    e1 = np.zeros(d)
    e1[0] = 1.0
    if d == 1:
        if p[0] > 0:
            return np.eye(1)
        raise DegeneratePair("R^1 admits no proper rotation taking -e1 to e1")
    if np.linalg.norm(p + e1) >= np.linalg.norm(p - e1):
        # p leans toward +e1: reflect p onto -e1, then -e1 onto e1.
        first = _householder(p + e1)
        second = _householder(e1)
    else:
        # p leans toward -e1: reflect p onto e1, then reflect across a
        # hyperplane containing e1 to restore det = +1.
        first = _householder(p - e1)
        e2 = np.zeros(d)
        e2[1] = 1.0
        second = _householder(e2)
    return second @ first


def random_unit(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Uniform random point of the unit sphere in R^dim."""
    while True:
        g = rng.normal(size=dim)
        n = float(np.linalg.norm(g))
        if n > 1e-8:
            return g / n


def random_in_disk(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Uniform random point of the open unit disk in R^dim."""
    direction = random_unit(rng, dim)
    radius = rng.random() ** (1.0 / dim)
    return radius * direction


def random_rotation(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Random proper rotation of R^dim (QR of a Gaussian matrix, sign-fixed)."""
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    q = q * signs
    if float(np.linalg.det(q)) < 0:
        q[:, 0] = -q[:, 0]
    return q
