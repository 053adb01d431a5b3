"""Static matplotlib renderings saved to files (SVG/PNG/PDF by suffix)."""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "polemap"  # stable element ids across runs

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .angles import Angle  # noqa: E402
from .dynamics import Orbit  # noqa: E402
from .geometry import SliceFrame  # noqa: E402


def _save(fig, path) -> Path:
    path = Path(path)
    kwargs = {}
    if path.suffix.lower() == ".svg":
        kwargs["metadata"] = {"Date": None}  # keep output byte-stable across runs
    fig.savefig(path, bbox_inches="tight", **kwargs)
    plt.close(fig)
    return path


def _unit_circle(ax):
    t = np.linspace(0.0, 2.0 * math.pi, 512)
    ax.plot(np.cos(t), np.sin(t), color="0.8", lw=1.0, zorder=0)
    ax.set_aspect("equal")


def save_orbit_slice_figure(orbit: Orbit, frame: SliceFrame, path, title: str = "orbit") -> Path:
    """Orbit polyline in the slice-plane coordinates (x.pole, x.complement)."""
    a = orbit.points @ frame.pole
    b = orbit.points @ frame.complement
    fig, ax = plt.subplots(figsize=(5, 5))
    _unit_circle(ax)
    ax.plot(a, b, "-", color="C0", lw=0.7, alpha=0.7)
    ax.plot(a, b, ".", color="C0", ms=3)
    ax.plot(a[0], b[0], "o", color="C2", ms=7, label="start")
    ax.plot(1.0, 0.0, "*", color="C3", ms=11, label="pole")
    ax.set_xlabel("component along pole")
    ax.set_ylabel("component along complement")
    ax.set_title(title)
    ax.legend(loc="upper left", fontsize=8)
    return _save(fig, path)


def save_angle_orbit_figure(angles: list[Angle], path, title: str = "angle orbit") -> Path:
    """Exact angle orbit drawn on the unit circle."""
    pts = np.array([[math.cos(a.to_radians()), math.sin(a.to_radians())] for a in angles])
    fig, ax = plt.subplots(figsize=(5, 5))
    _unit_circle(ax)
    ax.plot(pts[:, 0], pts[:, 1], "-", color="C0", lw=0.7, alpha=0.7)
    ax.plot(pts[:, 0], pts[:, 1], "o", color="C0", ms=4)
    ax.plot(pts[0, 0], pts[0, 1], "o", color="C2", ms=8, label="start")
    for k, (x, y) in enumerate(pts):
        ax.annotate(str(k), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_title(title)
    ax.legend(loc="upper left", fontsize=8)
    return _save(fig, path)


def save_plane_curves_figure(samples, pedal: np.ndarray, orthotomic: np.ndarray, p, path,
                             title: str = "pedal and orthotomic") -> Path:
    """Source curve overlaid with its pedal and orthotomic."""
    src = np.array([s.position for s in samples])
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.plot(src[:, 0], src[:, 1], "-", color="0.4", lw=1.2, label="curve")
    ax.plot(pedal[:, 0], pedal[:, 1], "-", color="C0", lw=1.2, label="pedal")
    ax.plot(orthotomic[:, 0], orthotomic[:, 1], "-", color="C3", lw=1.2, label="orthotomic")
    ax.plot(p[0], p[1], "*", color="k", ms=11, label="base point")
    ax.set_aspect("equal")
    ax.legend(fontsize=8)
    ax.set_title(title)
    return _save(fig, path)


def save_sphere_curves_figure(pedal: np.ndarray, orthotomic: np.ndarray, p, path,
                              title: str = "spherical pedal and orthotomic") -> Path:
    """Pedal and orthotomic curves on the sphere; 3-D axes in R^3,
    first-two-coordinate projection otherwise."""
    if pedal.shape[1] == 3:
        fig = plt.figure(figsize=(6, 6))
        ax = fig.add_subplot(projection="3d")
        ax.plot(pedal[:, 0], pedal[:, 1], pedal[:, 2], color="C0", lw=1.2, label="pedal")
        ax.plot(orthotomic[:, 0], orthotomic[:, 1], orthotomic[:, 2], color="C3", lw=1.2,
                label="orthotomic")
        ax.scatter([p[0]], [p[1]], [p[2]], color="k", marker="*", s=80, label="pole")
        ax.set_box_aspect((1, 1, 1))
    else:
        fig, ax = plt.subplots(figsize=(6, 6))
        ax.plot(pedal[:, 0], pedal[:, 1], "-", color="C0", lw=1.2, label="pedal")
        ax.plot(orthotomic[:, 0], orthotomic[:, 1], "-", color="C3", lw=1.2, label="orthotomic")
        ax.plot(p[0], p[1], "*", color="k", ms=11, label="pole")
        ax.set_aspect("equal")
    ax.legend(fontsize=8)
    ax.set_title(title)
    return _save(fig, path)
