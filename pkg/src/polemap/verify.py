"""Seeded verification suite.

Each check re-derives one numerical contract of the library at a configured
sphere dimension and reports a pass/fail row with the worst error seen.
The suite is deterministic for a fixed (dimension, seed, samples) triple,
which is what makes `verify` reports byte-identical across runs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import chaos
from .angles import Angle, angle_point, angle_step
from .chaos import check_report_consistency, max_gap_turns, periodic_angles
from .dynamics import (
    chebyshev_projection,
    chebyshev_step,
    equivariance_pair,
    interval_conjugacy,
    pole_map,
    preimage_in_disk,
    preimage_on_sphere,
)
from .geometry import (
    SliceFrame,
    deterministic_orthogonal,
    orthonormal_complement,
    random_in_disk,
    random_rotation,
    random_unit,
    rotate_pole_to_axis,
    slice_angle,
    slice_embed,
)

ROUNDTRIP_TOL = 1e-10
FRESH_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    samples: int
    tolerance: float
    max_error: float
    note: str = ""


def _ambient(dim: int) -> int:
    if dim < 1:
        raise ValueError("sphere dimension must be >= 1")
    return dim + 1


def check_sphere_image_norm(dim: int, seed: int, samples: int) -> CheckResult:
    """Unit starts stay unit: | ||map(x)|| - 1 | at rounding level."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 11, dim])
    worst = 0.0
    for _ in range(samples):
        p = random_unit(rng, d)
        x = random_unit(rng, d)
        worst = max(worst, abs(float(np.linalg.norm(pole_map(p, x))) - 1.0))
    return CheckResult("sphere-image-unit-norm", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_disk_image(dim: int, seed: int, samples: int) -> CheckResult:
    """Interior starts stay strictly interior."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 12, dim])
    worst = 0.0
    for _ in range(samples):
        p = random_unit(rng, d)
        x = random_in_disk(rng, d) * (1.0 - 1e-12)
        worst = max(worst, float(np.linalg.norm(pole_map(p, x))))
    return CheckResult("disk-image-inside", worst < 1.0, samples, 1.0, worst,
                       note="strict bound, value shown is the largest image norm")


def check_sphere_preimage_roundtrip(dim: int, seed: int, samples: int) -> CheckResult:
    """map(preimage(y)) returns y, including the antipodal branch y = -p."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 13, dim])
    worst = 0.0
    for i in range(samples):
        p = random_unit(rng, d)
        y = -p if (d >= 2 and i % 100 == 0) else random_unit(rng, d)
        x = preimage_on_sphere(p, y)
        worst = max(worst, float(np.linalg.norm(pole_map(p, x) - y)))
    return CheckResult("sphere-preimage-roundtrip", worst <= ROUNDTRIP_TOL, samples,
                       ROUNDTRIP_TOL, worst, note="every 100th target is the antipode of the pole")


def check_disk_preimage_roundtrip(dim: int, seed: int, samples: int) -> CheckResult:
    """map(preimage(y)) returns y for interior targets."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 14, dim])
    worst = 0.0
    for _ in range(samples):
        p = random_unit(rng, d)
        y = random_in_disk(rng, d) * (1.0 - 1e-8)
        x = preimage_in_disk(p, y)
        worst = max(worst, float(np.linalg.norm(pole_map(p, x) - y)))
    return CheckResult("disk-preimage-roundtrip", worst <= ROUNDTRIP_TOL, samples,
                       ROUNDTRIP_TOL, worst)


def check_interval_conjugacy(seed: int, grid: int = 100000) -> CheckResult:
    """The conjugated 1-disk dynamics equals the logistic map on a grid."""
    x = np.linspace(0.0, 1.0, grid)
    target = 4.0 * x * (1.0 - x)
    worst = 0.0
    for pole in (1, -1):
        worst = max(worst, float(np.max(np.abs(interval_conjugacy(pole, x) - target))))
    return CheckResult("interval-conjugacy-grid", worst <= FRESH_TOL, 2 * grid, FRESH_TOL, worst,
                       note="both poles, uniform grid on [0, 1]")


def check_chebyshev_semiconjugacy(dim: int, seed: int, samples: int) -> CheckResult:
    """The pole-axis coordinate steps by t -> 2t^2 - 1 for any ambient x."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 15, dim])
    worst = 0.0
    for i in range(samples):
        p = random_unit(rng, d)
        x = random_unit(rng, d) if i % 2 else random_in_disk(rng, d)
        t = chebyshev_projection(p, x)
        worst = max(worst, abs(chebyshev_projection(p, pole_map(p, x)) - chebyshev_step(t)))
    return CheckResult("chebyshev-semiconjugacy", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_equivariance(dim: int, seed: int, samples: int) -> CheckResult:
    """Rotating pole and point commutes with the map."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 16, dim])
    worst = 0.0
    for _ in range(samples):
        r = random_rotation(rng, d)
        p = random_unit(rng, d)
        x = random_unit(rng, d)
        lhs, rhs = equivariance_pair(r, p, x)
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return CheckResult("rotation-equivariance", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_slice_closure(dim: int, seed: int, samples: int) -> CheckResult:
    """map(x) stays in span(p, x)."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 17, dim])
    worst = 0.0
    for _ in range(samples):
        p = random_unit(rng, d)
        x = random_unit(rng, d)
        if abs(float(np.dot(p, x))) > 1.0 - 1e-6:
            continue  # span is 1-dimensional; closure is then immediate
        w = orthonormal_complement(p, x)
        y = pole_map(p, x)
        r = y - float(np.dot(y, p)) * p - float(np.dot(y, w)) * w
        worst = max(worst, float(np.linalg.norm(r)))
    return CheckResult("slice-closure", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_rotation_to_axis(dim: int, seed: int, samples: int) -> CheckResult:
    """rotate_pole_to_axis is orthogonal, proper, and sends p to e1."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 18, dim])
    worst = 0.0
    e1 = np.zeros(d)
    e1[0] = 1.0
    for _ in range(samples):
        p = random_unit(rng, d)
        r = rotate_pole_to_axis(p)
        worst = max(worst, float(np.max(np.abs(r.T @ r - np.eye(d)))))
        worst = max(worst, float(np.linalg.norm(r @ p - e1)))
        worst = max(worst, abs(float(np.linalg.det(r)) - 1.0))
    return CheckResult("rotation-pole-to-axis", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_complement(dim: int, seed: int, samples: int) -> CheckResult:
    """Orthonormal complement: unit, orthogonal, and spans with p through q."""
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 19, dim])
    worst = 0.0
    for _ in range(samples):
        p = random_unit(rng, d)
        q = random_unit(rng, d)
        if abs(float(np.dot(p, q))) > 1.0 - 1e-6:
            continue
        w = orthonormal_complement(p, q)
        worst = max(worst, abs(float(np.dot(w, p))))
        worst = max(worst, abs(float(np.linalg.norm(w)) - 1.0))
        residual = q - float(np.dot(q, p)) * p
        worst = max(worst, float(np.linalg.norm(residual - float(np.linalg.norm(residual)) * w)))
    return CheckResult("orthonormal-complement", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_slice_roundtrip(dim: int, seed: int, samples: int) -> CheckResult:
    """slice_angle inverts slice_embed, and embeddings are unit vectors."""
    d = _ambient(dim)
    if d < 2:
        raise ValueError("slice frames need ambient dimension >= 2")
    rng = np.random.default_rng([seed, 20, dim])
    worst = 0.0
    for _ in range(samples):
        p = random_unit(rng, d)
        frame = SliceFrame(p, deterministic_orthogonal(p))
        theta = rng.uniform(0.0, 2.0 * math.pi)
        x = slice_embed(frame, theta)
        worst = max(worst, abs(float(np.linalg.norm(x)) - 1.0))
        diff = abs(slice_angle(frame, x) - theta) % (2.0 * math.pi)
        worst = max(worst, min(diff, 2.0 * math.pi - diff))
    return CheckResult("slice-embed-roundtrip", worst <= FRESH_TOL, samples, FRESH_TOL, worst)


def check_angle_reduction(dim: int, seed: int, orbits: int = 100, steps: int = 50) -> CheckResult:
    """One step of the ambient map matches one step of the angle recursion.

    On the circle the pole sits at a random angle alpha; in higher
    dimension the comparison runs inside a random slice circle, where the
    pole's own slice angle is zero.
    """
    d = _ambient(dim)
    rng = np.random.default_rng([seed, 21, dim])
    worst = 0.0
    for _ in range(orbits):
        if d == 2:
            alpha = Angle(radians=rng.uniform(0.0, 2.0 * math.pi))
            p = angle_point(alpha)
            x = angle_point(Angle(radians=rng.uniform(0.0, 2.0 * math.pi)))
            frame = None
        else:
            alpha = Angle(radians=0.0)
            p = random_unit(rng, d)
            frame = SliceFrame(p, deterministic_orthogonal(p))
            x = slice_embed(frame, rng.uniform(0.0, 2.0 * math.pi))
        for _ in range(steps):
            if frame is None:
                theta = Angle(radians=math.atan2(x[1], x[0]))
                predicted = angle_point(angle_step(alpha, theta))
            else:
                theta = Angle(radians=slice_angle(frame, x))
                predicted = slice_embed(frame, angle_step(alpha, theta).to_radians())
            x = pole_map(p, x)
            x = x / float(np.linalg.norm(x))
            worst = max(worst, float(np.linalg.norm(x - predicted)))
    return CheckResult("angle-reduction", worst <= FRESH_TOL, orbits * steps, FRESH_TOL, worst,
                       note="one-step agreement along renormalized orbits")


def check_periodic_density(seed: int, k: int = 10) -> CheckResult:
    """Exact periodic-point enumeration on the circle: count and max gap."""
    rng = np.random.default_rng([seed, 22])
    alpha = Angle(turns=Fraction(int(rng.integers(0, 97)), 97))
    angles = periodic_angles(alpha, k)
    count_ok = len(angles) == 2**k - 1
    gap_ok = max_gap_turns(angles) == Fraction(1, 2**k - 1)
    passed = count_ok and gap_ok
    return CheckResult("periodic-density", passed, len(angles), 0.0, 0.0,
                       note=f"k={k}, count={len(angles)}, max gap = 1/{2**k - 1} turn (exact)")


def chaos_reports_for_dim(dim: int, seed: int) -> list[chaos.ChaosReport]:
    """The chaos reports appropriate for a sphere dimension."""
    rng = np.random.default_rng([seed, 23, dim])
    if dim == 1:
        alpha = Angle(turns=Fraction(int(rng.integers(0, 31)), 31))
        return [chaos.circle_chaos_report(alpha, seed=seed),
                chaos.interval_chaos_report(1, seed=seed),
                chaos.interval_chaos_report(-1, seed=seed)]
    p = random_unit(rng, dim + 1)
    return [chaos.sphere_chaos_report(p, seed=seed),
            chaos.disk_chaos_report(p, seed=seed)]


def check_classification(dim: int, seed: int) -> CheckResult:
    """Chaos reports classify consistently with their component verdicts."""
    reports = chaos_reports_for_dim(dim, seed)
    labels = []
    try:
        for report in reports:
            check_report_consistency(report)
            labels.append(f"{report.system}={report.classification}")
            if dim >= 2 and report.transitive is not False:
                raise ValueError(f"{report.system} report must carry non-transitivity evidence")
            if dim == 1 and report.classification != "Devaney":
                raise ValueError(f"{report.system} report should classify as Devaney")
        passed = True
    except ValueError as exc:
        labels.append(str(exc))
        passed = False
    return CheckResult("chaos-classification", passed, len(reports), 0.0, 0.0,
                       note="; ".join(labels))


def run_checks(dim: int, seed: int, samples: int = 10000) -> list[CheckResult]:
    """The full suite for one sphere dimension."""
    results = [
        check_sphere_image_norm(dim, seed, samples),
        check_disk_image(dim, seed, samples),
        check_sphere_preimage_roundtrip(dim, seed, samples),
        check_disk_preimage_roundtrip(dim, seed, samples),
        check_interval_conjugacy(seed),
        check_chebyshev_semiconjugacy(dim, seed, samples),
        check_equivariance(dim, seed, min(samples, 2000)),
        check_slice_closure(dim, seed, samples),
        check_rotation_to_axis(dim, seed, min(samples, 1000)),
        check_complement(dim, seed, samples),
        check_slice_roundtrip(dim, seed, samples),
        check_angle_reduction(dim, seed),
    ]
    if dim == 1:
        results.append(check_periodic_density(seed))
    results.append(check_classification(dim, seed))
    return results


def render_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  {status}  max_err={r.max_error:.3e}  tol={r.tolerance:.1e}  n={r.samples}"
        if r.note:
            line += f"  [{r.note}]"
        lines.append(line)
    return "\n".join(lines)
