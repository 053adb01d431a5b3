"""Pedal and orthotomic companions of sampled curves.

In the plane, for a curve sample (position gamma, unit normal N) and a
fixed point p:

    pedal      = p + ((gamma - p) . N) N
    orthotomic = p + 2 ((gamma - p) . N) N = 2 * pedal - p

so the orthotomic is the image of the pedal under doubling about p.

On the unit sphere the analogous relation runs through the pole map:
the orthotomic of a spherical curve is pole_map(p, pedal), provided the
pedal never becomes orthogonal to p.  Spherical pedal curves are taken as
input samples here (small circles around the pole are the analytic test
family); this module derives orthotomics from them, it does not construct
pedals from a spherical curve and its normal frame.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PedalDegenerate
from .geometry import (
    DEGENERATE_TOL,
    FRESH_TOL,
    as_vector,
    deterministic_orthogonal,
    sphere_point,
)
from .dynamics import pole_map


@dataclass(frozen=True)
class PlaneCurveSample:
    """One sample of a plane curve: parameter, position, unit normal."""

    s: float
    position: np.ndarray
    normal: np.ndarray

    def __post_init__(self):
        pos = as_vector(self.position)
        nrm = as_vector(self.normal)
        if pos.size != 2 or nrm.size != 2:
            raise ValueError("plane samples are 2-dimensional")
        if abs(float(np.linalg.norm(nrm)) - 1.0) > FRESH_TOL:
            raise ValueError("sample normal must have unit length")
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "normal", nrm)


@dataclass(frozen=True)
class SphereCurveSample:
    """One sample of a spherical pedal curve: parameter and pedal point."""

    s: float
    pedal: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "pedal", sphere_point(self.pedal))


def plane_pedal(samples, p) -> np.ndarray:
    """Pedal points p + ((gamma - p) . N) N, one row per sample."""
    p = as_vector(p)
    out = np.empty((len(samples), 2))
    for i, sample in enumerate(samples):
        t = float(np.dot(sample.position - p, sample.normal))
        out[i] = p + t * sample.normal
    return out


def plane_orthotomic(samples, p) -> np.ndarray:
    """Orthotomic points p + 2 ((gamma - p) . N) N, one row per sample."""
    p = as_vector(p)
    out = np.empty((len(samples), 2))
    for i, sample in enumerate(samples):
        t = float(np.dot(sample.position - p, sample.normal))
        out[i] = p + 2.0 * t * sample.normal
    return out


def double_about(p, x) -> np.ndarray:
    """The doubling map 2x - p (scaling by 2 about p); carries pedal to
    orthotomic in the plane."""
    p = as_vector(p)
    x = np.asarray(x, dtype=float)
    return 2.0 * x - p


def sphere_orthotomic(samples, p, threshold: float = DEGENERATE_TOL) -> np.ndarray:
    """Orthotomic of a spherical pedal curve: pole_map(p, pedal) per sample.

    Raises PedalDegenerate (with the offending index) when some pedal
    sample is orthogonal to the pole within ``threshold``; there the pedal
    construction itself breaks down.  Outputs are unit vectors satisfying
    (orthotomic + p) / 2 = (p . pedal) pedal.
    """
    p = sphere_point(p)
    out = np.empty((len(samples), p.size))
    for i, sample in enumerate(samples):
        if abs(float(np.dot(p, sample.pedal))) <= threshold:
            raise PedalDegenerate(i, f"pedal sample {i} is orthogonal to the pole")
        out[i] = pole_map(p, sample.pedal)
    return out


def unit_circle_samples(count: int, radius: float = 1.0) -> list[PlaneCurveSample]:
    """The circle of given radius about the origin, inward unit normals."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for i in range(count):
        s = 2.0 * math.pi * i / count
        direction = np.array([math.cos(s), math.sin(s)])
        out.append(PlaneCurveSample(s, radius * direction, -direction))
    return out


def line_samples(count: int, height: float = 1.0, span: float = 3.0) -> list[PlaneCurveSample]:
    """The horizontal line y = height with upward normals."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for i in range(count):
        s = -span + 2.0 * span * i / max(count - 1, 1)
        out.append(PlaneCurveSample(s, np.array([s, height]), np.array([0.0, 1.0])))
    return out


def small_circle_pedal_samples(p, colatitude: float, count: int) -> list[SphereCurveSample]:
    """Pedal samples on the circle at fixed angle ``colatitude`` from p.

    ped(s) = cos(colatitude) p + sin(colatitude) W(s) with W(s) rotating in
    the equator of p; its orthotomic sits at twice the colatitude.  Needs
    ambient dimension >= 3 so the equator has room to rotate, and a
    colatitude away from pi/2 so the pedal stays non-orthogonal to p.
    """
    p = sphere_point(p)
    if p.size < 3:
        raise ValueError("small-circle pedals need ambient dimension >= 3")
    if count < 1:
        raise ValueError("count must be >= 1")
    if abs(math.cos(colatitude)) <= DEGENERATE_TOL:
        raise ValueError("colatitude pi/2 makes the pedal orthogonal to the pole")
    w1 = deterministic_orthogonal(p)
    w2 = _third_direction(p, w1)
    out = []
    for i in range(count):
        s = 2.0 * math.pi * i / count
        w = math.cos(s) * w1 + math.sin(s) * w2
        out.append(SphereCurveSample(s, math.cos(colatitude) * p + math.sin(colatitude) * w))
    return out


def _third_direction(p: np.ndarray, w1: np.ndarray) -> np.ndarray:
    """A basis vector independent of both p and w1."""
    for i in range(p.size):
        e = np.zeros(p.size)
        e[i] = 1.0
        r = e - float(np.dot(e, p)) * p - float(np.dot(e, w1)) * w1
        if float(np.linalg.norm(r)) > 0.1:
            return r / float(np.linalg.norm(r))
    raise ValueError("could not complete the frame")
