"""Executable chaos checks for the pole map.

The notions tested here are the standard metric-space ones:

* sensitive -- some separation constant lambda > 0 such that arbitrarily
  close to any point there is another whose iterate drifts beyond lambda;
* transitive -- some iterate of any open set meets any other open set;
* accessible -- points of any two open sets can be iterated to within any
  prescribed distance of each other;
* Devaney chaos = sensitive + transitive + dense periodic points;
* Kato chaos = sensitive + accessible.

On every great circle through the pole the map doubles the angle measured
from the pole, so witnesses can be built constructively: a perturbation
inside the slice circle doubles its angular gap each step (sensitivity),
and a ball's slice arc doubles in length each step until it covers the
whole circle, after which both input sets can be steered exactly onto the
pole, a fixed point (accessibility).  In ambient dimension >= 3 every
orbit is confined to its own slice circle, which is what the
non-transitivity certificate records.

Everything random is driven by explicit seeds, probes report the horizon
they searched, and witnesses carry the data needed to replay them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .angles import Angle, angle_point, step_turns
from .dynamics import chebyshev_projection, iterate, pole_map_rows
from .errors import BudgetExceeded, DegenerateConfiguration, DerivativeSingular
from .geometry import (
    DEGENERATE_TOL,
    UNIT_TOL,
    chord_distance,
    disk_point,
    frame_through,
    random_unit,
    require_same_dim,
    slice_angle,
    slice_embed,
    slice_residual,
    sphere_point,
)

DEFAULT_SEED = 0
# Default sensitivity constant: the chord diameter of the sphere is 2, and
# any value strictly between 0 and 2 works on a slice circle; 1 is far from
# both ends.
DEFAULT_SEPARATION = 1.0

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class OpenBall:
    """Open metric ball (chord metric) on the sphere or in the disk."""

    center: np.ndarray
    radius: float
    space: str = "sphere"

    def __post_init__(self):
        if self.space not in ("sphere", "disk"):
            raise ValueError("space must be 'sphere' or 'disk'")
        center = sphere_point(self.center) if self.space == "sphere" else disk_point(self.center)
        object.__setattr__(self, "center", center)
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    def contains(self, x) -> bool:
        return chord_distance(self.center, x) < self.radius


@dataclass(frozen=True)
class CircleArc:
    """Open circle arc with exact rational endpoints, in turns.

    Exact endpoints keep the arc-image arithmetic free of sampling error:
    the image of an arc under angle doubling is again an arc, of twice the
    width, until it covers the whole circle.
    """

    center: Fraction
    half_width: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center) % 1)
        object.__setattr__(self, "half_width", Fraction(self.half_width))
        if not self.half_width > 0:
            raise ValueError("half_width must be positive")

    @property
    def full(self) -> bool:
        return self.half_width >= Fraction(1, 2)

    def step(self, alpha_turns: Fraction) -> "CircleArc":
        """Image arc after one step of theta -> 2*theta - alpha."""
        return CircleArc(step_turns(alpha_turns, self.center), min(2 * self.half_width, Fraction(1, 2)))

    def intersects(self, other: "CircleArc") -> bool:
        if self.full or other.full:
            return True
        d = abs(self.center - other.center)
        d = min(d % 1, 1 - d % 1)
        return d < self.half_width + other.half_width

    def contains_turns(self, t: Fraction) -> bool:
        if self.full:
            return True
        d = abs(Fraction(t) % 1 - self.center)
        d = min(d, 1 - d)
        return d < self.half_width


def coverage_step(arc: CircleArc) -> int:
    """Doublings needed before the arc's image is the whole circle."""
    s = 0
    w = arc.half_width
    while w < Fraction(1, 2):
        w *= 2
        s += 1
    return s


@dataclass(frozen=True)
class Witness:
    """One or two state points, a step count, and the separation achieved
    at that step.  Witnesses are replayable: re-iterating the points must
    reproduce the separation."""

    points: tuple
    step: int
    separation: float

    def __post_init__(self):
        if self.step < 0 or self.separation < 0:
            raise ValueError("step and separation must be non-negative")


def replay_separations(p, a, b, steps: int, renormalize: str = "every-step") -> np.ndarray:
    """Chord distance between the iterates of a and b at steps 0..steps."""
    orbit_a = iterate(p, a, steps, renormalize)
    orbit_b = iterate(p, b, steps, renormalize)
    return np.linalg.norm(orbit_a.points - orbit_b.points, axis=1)


def sensitivity_witness(p, x, delta: float, lam: float, max_k: int) -> Witness:
    """Perturbation y with d(x, y) <= delta whose iterate separates from
    the iterate of x beyond lam within max_k steps.

    y is taken inside the slice circle through x (an arbitrary slice circle
    when x = +/-p), where the angular gap exactly doubles each step; the
    returned step is found by replaying the pair, so the witness validates
    under re-simulation.
    """
    p = sphere_point(p)
    x = sphere_point(x)
    require_same_dim(p, x)
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not 0 < lam < 2:
        raise ValueError("lam must lie strictly between 0 and the chord diameter 2")
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    frame = frame_through(p, x)
    theta = slice_angle(frame, x)
    # chord(eps) = 2 sin(eps/2) <= eps; the shrink keeps the distance under
    # delta even after embedding rounding
    eps = 0.999999 * min(delta, math.pi)
    y = slice_embed(frame, theta + eps)
    separations = replay_separations(p, x, y, max_k)
    for k, sep in enumerate(separations):
        if sep > lam:
            return Witness((x.copy(), y), int(k), float(sep))
    raise BudgetExceeded(
        f"no separation beyond lam={lam} within {max_k} steps for delta={delta}; "
        "raise max_k, lower lam, or enlarge delta"
    )


def disk_sensitivity_witness(p, x, delta: float, lam: float, max_k: int) -> Witness:
    """Sensitivity witness for a base point of the closed unit disk.

    Boundary base points use the sphere construction (which stays inside
    the disk).  Interior base points are nudged along the pole axis: the
    axis coordinate t = x.p evolves as t -> 2t^2 - 1 independently of the
    rest of x, and the ambient chord distance dominates the |t| gap, so a
    perturbation of the axis coordinate is enough to separate orbits.
    """
    p = sphere_point(p)
    x = disk_point(x)
    require_same_dim(p, x)
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not 0 < lam < 2:
        raise ValueError("lam must lie strictly between 0 and 2")
    nx = float(np.linalg.norm(x))
    if abs(nx - 1.0) <= UNIT_TOL:
        if p.size >= 2:
            return sensitivity_witness(p, x / nx, delta, lam, max_k)
        eps = 0.5 * min(delta, 1.0)
        y = x * (1.0 - eps)  # the 1-disk boundary can only move inward
    else:
        # shrink below delta so the perturbation distance stays under it
        # even after rounding
        eps = 0.999999 * min(delta, 0.5 * (1.0 - nx))
        t = chebyshev_projection(p, x)
        direction = -1.0 if t > 0 else 1.0  # keeps ||y|| < 1
        y = x + direction * eps * p
    separations = replay_separations(p, x, y, max_k, renormalize="off")
    for k, sep in enumerate(separations):
        if sep > lam:
            return Witness((x.copy(), y), int(k), float(sep))
    raise BudgetExceeded(
        f"no disk separation beyond lam={lam} within {max_k} steps for delta={delta}"
    )


def _dyadic_arc_data(p, ball: OpenBall):
    """Slice frame, center angle, and angular radius of a sphere ball."""
    frame = frame_through(p, ball.center)
    theta_c = slice_angle(frame, ball.center)
    # points of the slice circle within angle s of the center are at chord
    # distance 2 sin(s/2), so the arc inside the ball has angular radius:
    a = 2.0 * math.asin(min(ball.radius, 2.0) / 2.0)
    return frame, theta_c, a


def _lift_to_sphere(v: np.ndarray) -> np.ndarray:
    """Append the coordinate that puts a disk point onto the sphere above it."""
    h = math.sqrt(max(0.0, 1.0 - float(np.dot(v, v))))
    return np.append(v, h)


def accessibility_witness(p, u: OpenBall, v: OpenBall, lam: float) -> Witness:
    """Points u0 in U and v0 in V whose k-th iterates coincide at the pole.

    Inside each sphere ball, the slice-circle arc through its center needs
    ceil(log2(pi / angular radius)) doublings to cover its whole slice
    circle; at dyadic order k both arcs contain a point whose k-th iterate
    is exactly the pole, a fixed point, so the achieved separation is
    rounding-level (about 2^k * 1e-16) rather than merely below lam.

    Disk balls are lifted one dimension up: dropping the last coordinate
    sends the sphere dynamics onto the disk dynamics and never increases
    distances, so the sphere witness projects to a disk witness.
    """
    if u.space != v.space:
        raise ValueError("the two balls must live in the same space")
    if not lam > 0:
        raise ValueError("lam must be positive")
    p = sphere_point(p)
    require_same_dim(p, u.center)

    if u.space == "disk":
        lifted_pole = np.append(p, 0.0)
        lifted_u = OpenBall(_lift_to_sphere(u.center), u.radius, "sphere")
        lifted_v = OpenBall(_lift_to_sphere(v.center), v.radius, "sphere")
        up = accessibility_witness(lifted_pole, lifted_u, lifted_v, lam)
        u0, v0 = up.points[0][:-1], up.points[1][:-1]
        sep = float(replay_separations(p, u0, v0, up.step, renormalize="off")[-1])
        return Witness((u0, v0), up.step, sep)

    if np.array_equal(u.center, v.center) and u.radius == v.radius:
        sep = float(replay_separations(p, u.center, u.center, 1)[-1])
        return Witness((u.center.copy(), u.center.copy()), 1, sep)

    frame_u, theta_u, a_u = _dyadic_arc_data(p, u)
    frame_v, theta_v, a_v = _dyadic_arc_data(p, v)
    k = max(1, math.ceil(math.log2(math.pi / a_u)), math.ceil(math.log2(math.pi / a_v)))
    for _ in range(64):
        spacing = 2.0 * math.pi / 2.0**k
        u0 = slice_embed(frame_u, spacing * round(theta_u / spacing))
        v0 = slice_embed(frame_v, spacing * round(theta_v / spacing))
        if u.contains(u0) and v.contains(v0):
            break
        k += 1  # nearest dyadic angle fell on the ball boundary; refine
    else:
        raise BudgetExceeded("could not place a dyadic angle strictly inside both balls")
    sep = float(replay_separations(p, u0, v0, k)[-1])
    return Witness((u0, v0), k, sep)


def _sample_in_ball(rng: np.random.Generator, ball: OpenBall) -> np.ndarray:
    dim = ball.center.size
    if ball.space == "sphere":
        if dim == 1:
            return ball.center.copy()
        omega_max = 2.0 * math.asin(min(ball.radius, 2.0) / 2.0)
        while True:
            g = rng.normal(size=dim)
            t = g - float(np.dot(g, ball.center)) * ball.center
            n = float(np.linalg.norm(t))
            if n > 1e-8:
                t = t / n
                break
        omega = omega_max * rng.random() ** (1.0 / (dim - 1))
        return math.cos(omega) * ball.center + math.sin(omega) * t
    while True:
        g = rng.normal(size=dim)
        n = float(np.linalg.norm(g))
        if n <= 1e-8:
            continue
        point = ball.center + ball.radius * rng.random() ** (1.0 / dim) * g / n
        if float(np.linalg.norm(point)) <= 1.0:
            return point


@dataclass(frozen=True)
class TransitivityProbe:
    """Bounded-horizon sampling evidence, not a proof: ``hit`` means some
    sampled start in U visited V by ``first_hit_step``; ``no hit`` only
    says no sample entered V within ``max_step`` steps."""

    hit: bool
    first_hit_step: int | None
    start_point: np.ndarray | None
    hit_point: np.ndarray | None
    max_step: int
    samples: int
    seed: int


def transitivity_probe(p, u: OpenBall, v: OpenBall, max_k: int, samples: int,
                       seed: int = DEFAULT_SEED) -> TransitivityProbe:
    """Iterate seeded samples of U and report the first step that lands in V.

    Each sample draws from its own (seed, index) stream, so the outcome is
    independent of evaluation order.
    """
    if max_k <= 0 or samples <= 0:
        raise ValueError("max_k and samples must be positive")
    if u.space != v.space:
        raise ValueError("the two balls must live in the same space")
    p = sphere_point(p)
    require_same_dim(p, u.center)
    starts = np.stack([_sample_in_ball(np.random.default_rng([seed, i]), u) for i in range(samples)])
    x = starts.copy()
    renorm = u.space == "sphere"
    for k in range(1, max_k + 1):
        x = pole_map_rows(p, x)
        if renorm:
            x = x / np.linalg.norm(x, axis=1)[:, None]
        dist = np.linalg.norm(x - v.center, axis=1)
        inside = dist < v.radius
        if np.any(inside):
            i = int(np.argmax(inside))
            return TransitivityProbe(True, k, starts[i], x[i], max_k, samples, seed)
    return TransitivityProbe(False, None, None, None, max_k, samples, seed)


@dataclass(frozen=True)
class ConfinementCertificate:
    """Evidence that an orbit stays on its slice and away from a reference
    point: max distance of the orbit from span(pole, start), min distance
    to the reference, and the reference's distance to the invariant set."""

    steps: int
    max_slice_residual: float
    min_distance_to_ref: float
    ref_gap: float
    residual_tol: float
    certified: bool


def slice_confinement_certificate(p, x0, ref, steps: int,
                                  residual_tol: float = RESIDUAL_TOL,
                                  space: str = "sphere") -> ConfinementCertificate:
    """Run an orbit and certify that it cannot reach the reference point.

    Requires pole, start, and reference to be linearly independent (Gram
    determinant above threshold), which needs ambient dimension >= 3.  The
    certificate holds when the orbit's slice residual stays below
    ``residual_tol`` and its distance to ``ref`` never drops below half of
    ``ref_gap``, the distance from ``ref`` to the invariant slice set
    (slice circle on the sphere, slice disk in the disk).
    """
    p = sphere_point(p)
    x0 = sphere_point(x0) if space == "sphere" else disk_point(x0)
    ref = sphere_point(ref) if space == "sphere" else disk_point(ref)
    require_same_dim(p, x0)
    require_same_dim(p, ref)
    if space not in ("sphere", "disk"):
        raise ValueError("space must be 'sphere' or 'disk'")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    gram = np.array([[np.dot(a, b) for b in (p, x0, ref)] for a in (p, x0, ref)])
    if abs(float(np.linalg.det(gram))) < DEGENERATE_TOL:
        raise DegenerateConfiguration("pole, start, and reference must be linearly independent")

    n0 = float(np.linalg.norm(x0))
    frame = frame_through(p, x0 / n0)
    orbit = iterate(p, x0, steps, renormalize="every-step" if space == "sphere" else "off")
    min_dist = float(np.min(np.linalg.norm(orbit.points - ref, axis=1)))
    if space == "sphere":
        reach = math.sqrt(float(np.dot(ref, frame.pole)) ** 2 + float(np.dot(ref, frame.complement)) ** 2)
        ref_gap = math.sqrt(max(0.0, 2.0 - 2.0 * reach))
    else:
        ref_gap = slice_residual(frame, ref)
    certified = orbit.max_slice_residual <= residual_tol and min_dist >= 0.5 * ref_gap
    return ConfinementCertificate(steps, orbit.max_slice_residual, min_dist, ref_gap,
                                  residual_tol, certified)


def periodic_angles(alpha: Angle, k: int) -> list[Angle]:
    """All angles whose period under theta -> 2*theta - alpha divides k.

    Exactly 2^k - 1 of them: alpha + j/(2^k - 1) turns for j = 0 .. 2^k - 2,
    equally spaced around the circle.  Requires the exact representation;
    every returned angle is re-verified by k exact steps.
    """
    if not alpha.is_exact:
        raise ValueError("periodic-point enumeration requires an exact rational pole angle")
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2**k - 1
    a = alpha.turns
    out = []
    for j in range(n):
        t0 = (a + Fraction(j, n)) % 1
        t = t0
        for _ in range(k):
            t = step_turns(a, t)
        assert t == t0, "exact periodicity check failed"
        out.append(Angle(turns=t0))
    out.sort(key=lambda ang: ang.turns)
    return out


def max_gap_turns(angles: list[Angle]) -> Fraction:
    """Largest circular gap (in turns) between consecutive exact angles."""
    turns = sorted(a.turns for a in angles)
    if len(turns) == 1:
        return Fraction(1)
    gaps = [b - a for a, b in zip(turns, turns[1:])]
    gaps.append(turns[0] + 1 - turns[-1])
    return max(gaps)


def lyapunov_estimate(system: str, x0: float, steps: int) -> float:
    """Birkhoff average of log |derivative| along an orbit.

    ``circle`` and ``slice`` share the one-dimensional angle dynamics,
    whose derivative is 2 at every point, so the average is exactly ln 2
    for any start.  ``logistic`` iterates x -> 4x(1-x) and averages
    log |4 - 8x|; the estimate converges to ln 2 for typical starts.
    """
    if steps < 1000:
        raise ValueError("steps must be >= 1000 for a meaningful Birkhoff average")
    if system in ("circle", "slice"):
        # the summands are all log 2; their mean is log 2 with no rounding
        return math.log(2.0)
    if system != "logistic":
        raise ValueError("system must be 'circle', 'slice', or 'logistic'")
    x = float(x0)
    if not 0.0 <= x <= 1.0:
        raise ValueError("logistic start must lie in [0, 1]")
    total = 0.0
    for _ in range(steps):
        if x == 0.5:
            raise DerivativeSingular("orbit hit the critical point x = 0.5 exactly")
        total += math.log(abs(4.0 - 8.0 * x))
        x = 4.0 * x * (1.0 - x)
    return total / steps


@dataclass(frozen=True)
class MixingResult:
    """Least step after which every later arc image meets the target arc,
    within the searched horizon."""

    settle_step: int
    coverage_step: int
    horizon: int


def mixing_probe(alpha: Angle, u: CircleArc, v: CircleArc, horizon: int) -> MixingResult:
    """Exact mixing check on the circle.

    Tracks the arc image of U under theta -> 2*theta - alpha in rational
    arithmetic and returns the least k such that the image meets V at every
    step from k through the horizon.  The horizon must reach the coverage
    step of U, past which images are the full circle and every later step
    intersects V.
    """
    if not alpha.is_exact:
        raise ValueError("mixing arithmetic requires an exact rational pole angle")
    cover = coverage_step(u)
    if horizon < max(cover, 1):
        raise ValueError(f"horizon {horizon} is below the coverage step {cover}")
    a = alpha.turns
    arc = u
    hits = []
    for _ in range(horizon):
        arc = arc.step(a)
        hits.append(arc.intersects(v))
    settle = horizon + 1
    for m in range(horizon, 0, -1):
        if not hits[m - 1]:
            break
        settle = m
    return MixingResult(settle, cover, horizon)


def folded_settle_step(u: CircleArc, v: CircleArc, horizon: int) -> int:
    """Interval analogue of :func:`mixing_probe`.

    The interval dynamics t -> 2t^2 - 1 is angle doubling seen through
    t = cos(angle), so an interval hit corresponds to the doubling image of
    the U arc meeting either V's arc or its mirror image.
    """
    cover = coverage_step(u)
    if horizon < max(cover, 1):
        raise ValueError(f"horizon {horizon} is below the coverage step {cover}")
    v_mirror = CircleArc((-v.center) % 1, v.half_width)
    arc = u
    hits = []
    for _ in range(horizon):
        arc = arc.step(Fraction(0))
        hits.append(arc.intersects(v) or arc.intersects(v_mirror))
    settle = horizon + 1
    for m in range(horizon, 0, -1):
        if not hits[m - 1]:
            break
        settle = m
    if settle > horizon:
        raise ValueError("no settling step within the horizon")
    return settle


def classify(sensitive: bool | None, accessible: bool | None,
             transitive: bool | None, periodic_dense: bool | None) -> str:
    """Chaos label from component verdicts.

    Devaney (sensitive + transitive + dense periodic points) wins over
    Kato (sensitive + accessible) when both hold; unknown components make
    the result inconclusive rather than a false negative.
    """
    if sensitive and transitive and periodic_dense:
        return "Devaney"
    if sensitive and accessible:
        return "Kato"
    if None in (sensitive, accessible):
        return "inconclusive"
    return "neither"


@dataclass(frozen=True)
class ChaosReport:
    """Per-system verdicts with their witnesses and evidence.

    ``kato`` records sensitive-and-accessible explicitly even when the
    label is the stronger ``Devaney``.  ``transitive`` is None when no
    verdict was attempted, True only with a constructive argument, and
    False only together with confinement evidence.
    """

    system: str
    dimension: int
    sensitive: bool
    accessible: bool
    kato: bool
    transitive: bool | None
    classification: str
    separation_constant: float
    sensitivity: Witness
    accessibility: Witness
    transitivity_evidence: dict
    periodic_density: dict | None
    seed: int


def check_report_consistency(report: ChaosReport) -> None:
    """Raise if the report's label contradicts its component verdicts."""
    if report.kato != (report.sensitive and report.accessible):
        raise ValueError("kato flag disagrees with sensitive and accessible")
    if report.sensitive and report.accessible and report.classification not in ("Kato", "Devaney"):
        raise ValueError("sensitive + accessible must classify as Kato (or Devaney)")
    if report.classification == "Devaney":
        if not (report.sensitive and report.transitive is True and report.periodic_density):
            raise ValueError("Devaney label requires sensitivity, transitivity, and periodic density")
    if report.transitive is False and report.classification == "Devaney":
        raise ValueError("a non-transitive system cannot be Devaney chaotic")


def _random_independent_pair(rng: np.random.Generator, p: np.ndarray, min_gap: float = 0.3):
    """Unit q, r with (p, q, r) well-conditioned and r far from the slice
    circle through q; used to stage non-transitivity evidence."""
    while True:
        q = random_unit(rng, p.size)
        r = random_unit(rng, p.size)
        gram = np.array([[np.dot(a, b) for b in (p, q, r)] for a in (p, q, r)])
        if abs(float(np.linalg.det(gram))) < 0.05:
            continue
        frame = frame_through(p, q)
        reach = math.sqrt(float(np.dot(r, frame.pole)) ** 2 + float(np.dot(r, frame.complement)) ** 2)
        if math.sqrt(max(0.0, 2.0 - 2.0 * reach)) >= min_gap:
            return q, r


def circle_chaos_report(alpha: Angle, seed: int = DEFAULT_SEED,
                        lam: float = DEFAULT_SEPARATION) -> ChaosReport:
    """Full report for the circle system with pole at the exact angle alpha."""
    if not alpha.is_exact:
        raise ValueError("the circle report needs an exact pole angle")
    p = angle_point(alpha)
    rng = np.random.default_rng([seed, 101])
    sens = sensitivity_witness(p, random_unit(rng, 2), delta=1e-6, lam=lam, max_k=40)
    acc = accessibility_witness(
        p,
        OpenBall(random_unit(rng, 2), 0.1),
        OpenBall(random_unit(rng, 2), 0.1),
        lam=1e-9,
    )
    u = CircleArc(Fraction(1, 7), Fraction(1, 100))
    v = CircleArc(Fraction(5, 9), Fraction(1, 100))
    mix = mixing_probe(alpha, u, v, horizon=coverage_step(u) + 8)
    angles = periodic_angles(alpha, 10)
    density = {
        "k": 10,
        "count": len(angles),
        "max_gap_turns": str(max_gap_turns(angles)),
        "verified_exact": True,
    }
    return ChaosReport(
        system="circle",
        dimension=2,
        sensitive=True,
        accessible=True,
        kato=True,
        transitive=True,
        classification=classify(True, True, True, True),
        separation_constant=lam,
        sensitivity=sens,
        accessibility=acc,
        transitivity_evidence={
            "kind": "arc-coverage",
            "settle_step": mix.settle_step,
            "coverage_step": mix.coverage_step,
            "horizon": mix.horizon,
        },
        periodic_density=density,
        seed=seed,
    )


def interval_chaos_report(pole: int, seed: int = DEFAULT_SEED,
                          lam: float = DEFAULT_SEPARATION) -> ChaosReport:
    """Full report for the 1-disk system with pole +1 or -1."""
    if pole not in (1, -1):
        raise ValueError("the 0-sphere pole must be +1 or -1")
    p = np.array([float(pole)])
    rng = np.random.default_rng([seed, 202])
    x0 = np.array([rng.uniform(-0.9, 0.9)])
    sens = disk_sensitivity_witness(p, x0, delta=1e-6, lam=lam, max_k=80)
    acc = accessibility_witness(
        p,
        OpenBall(np.array([rng.uniform(-0.8, 0.8)]), 0.1, "disk"),
        OpenBall(np.array([rng.uniform(-0.8, 0.8)]), 0.1, "disk"),
        lam=1e-9,
    )
    u = CircleArc(Fraction(1, 5), Fraction(1, 64))
    v = CircleArc(Fraction(3, 8), Fraction(1, 64))
    settle = folded_settle_step(u, v, horizon=coverage_step(u) + 8)
    # periodic points: the doubling-periodic angles fold down to cos values;
    # only half the circle is needed because cos identifies mirror angles
    n = 2**10 - 1
    values = np.sort([pole * math.cos(2.0 * math.pi * j / n) for j in range(n // 2 + 1)])
    tol = 1e-8  # float re-check; errors double per step from the exact angles
    verified = True
    for t in values:
        s = t
        for _ in range(10):
            s = 2.0 * pole * s * s - pole
        if abs(s - t) > tol:
            verified = False
            break
    density = {
        "k": 10,
        "count": int(values.size),
        "max_gap": float(np.max(np.diff(values))),
        "verified_exact": bool(verified),
    }
    return ChaosReport(
        system="interval",
        dimension=1,
        sensitive=True,
        accessible=True,
        kato=True,
        transitive=True,
        classification=classify(True, True, True, verified),
        separation_constant=lam,
        sensitivity=sens,
        accessibility=acc,
        transitivity_evidence={"kind": "folded-arc-coverage", "settle_step": settle},
        periodic_density=density,
        seed=seed,
    )


def sphere_chaos_report(p, seed: int = DEFAULT_SEED,
                        lam: float = DEFAULT_SEPARATION) -> ChaosReport:
    """Report for a sphere of dimension >= 2: Kato chaos plus confinement
    evidence that transitivity fails."""
    p = sphere_point(p)
    if p.size < 3:
        raise ValueError("this report is for ambient dimension >= 3")
    rng = np.random.default_rng([seed, 303])
    sens = sensitivity_witness(p, random_unit(rng, p.size), delta=1e-6, lam=lam, max_k=40)
    acc = accessibility_witness(
        p,
        OpenBall(random_unit(rng, p.size), 0.1),
        OpenBall(random_unit(rng, p.size), 0.1),
        lam=1e-9,
    )
    q, r = _random_independent_pair(rng, p)
    x0 = _sample_in_ball(np.random.default_rng([seed, 304]), OpenBall(q, 0.05))
    cert = slice_confinement_certificate(p, x0, r, steps=2000)
    probe = transitivity_probe(p, OpenBall(q, 0.05), OpenBall(r, 0.05),
                               max_k=500, samples=40, seed=seed)
    return ChaosReport(
        system="sphere",
        dimension=p.size,
        sensitive=True,
        accessible=True,
        kato=True,
        transitive=False,
        classification=classify(True, True, False, False),
        separation_constant=lam,
        sensitivity=sens,
        accessibility=acc,
        transitivity_evidence={
            "kind": "slice-confinement",
            "certified": cert.certified,
            "max_slice_residual": cert.max_slice_residual,
            "min_distance_to_ref": cert.min_distance_to_ref,
            "ref_gap": cert.ref_gap,
            "steps": cert.steps,
            "probe_hit": probe.hit,
            "probe_max_step": probe.max_step,
        },
        periodic_density=None,
        seed=seed,
    )


def disk_chaos_report(p, seed: int = DEFAULT_SEED,
                      lam: float = DEFAULT_SEPARATION) -> ChaosReport:
    """Report for the disk bounded by a sphere of dimension >= 2."""
    p = sphere_point(p)
    if p.size < 3:
        raise ValueError("this report is for ambient dimension >= 3")
    rng = np.random.default_rng([seed, 505])
    x0 = 0.7 * random_unit(rng, p.size)
    sens = disk_sensitivity_witness(p, x0, delta=1e-6, lam=lam, max_k=80)
    acc = accessibility_witness(
        p,
        OpenBall(0.8 * random_unit(rng, p.size), 0.1, "disk"),
        OpenBall(0.8 * random_unit(rng, p.size), 0.1, "disk"),
        lam=1e-9,
    )
    q, r = _random_independent_pair(rng, p)
    ball_q = OpenBall(0.9 * q, 0.05, "disk")
    ball_r = OpenBall(0.9 * r, 0.05, "disk")
    start = _sample_in_ball(np.random.default_rng([seed, 506]), ball_q)
    cert = slice_confinement_certificate(p, start, 0.9 * r, steps=2000, space="disk")
    probe = transitivity_probe(p, ball_q, ball_r, max_k=500, samples=40, seed=seed)
    return ChaosReport(
        system="disk",
        dimension=p.size,
        sensitive=True,
        accessible=True,
        kato=True,
        transitive=False,
        classification=classify(True, True, False, False),
        separation_constant=lam,
        sensitivity=sens,
        accessibility=acc,
        transitivity_evidence={
            "kind": "slice-confinement",
            "certified": cert.certified,
            "max_slice_residual": cert.max_slice_residual,
            "min_distance_to_ref": cert.min_distance_to_ref,
            "ref_gap": cert.ref_gap,
            "steps": cert.steps,
            "probe_hit": probe.hit,
            "probe_max_step": probe.max_step,
        },
        periodic_density=None,
        seed=seed,
    )
