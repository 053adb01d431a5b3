"""Chaos machinery: witnesses, probes, certificates, enumeration, reports."""
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from polemap import (
    Angle,
    BudgetExceeded,
    ChaosReport,
    CircleArc,
    DegenerateConfiguration,
    DerivativeSingular,
    OpenBall,
    accessibility_witness,
    angle_point,
    check_report_consistency,
    circle_chaos_report,
    classify,
    disk_chaos_report,
    disk_sensitivity_witness,
    interval_chaos_report,
    lyapunov_estimate,
    max_gap_turns,
    mixing_probe,
    periodic_angles,
    replay_separations,
    sensitivity_witness,
    slice_confinement_certificate,
    sphere_chaos_report,
    transitivity_probe,
)
from polemap import iterate
from polemap.chaos import coverage_step, folded_settle_step
from polemap.cli import _jsonable
from polemap.geometry import random_unit


# --- sensitivity --------------------------------------------------------


def test_sensitivity_on_circle():
    p = np.array([1.0, 0.0])
    x = angle_point(Angle(radians=0.1))
    w = sensitivity_witness(p, x, delta=1e-6, lam=1.0, max_k=25)
    assert w.step <= 21
    # replay: close at the start, separated at step k, and k is the first such step
    seps = replay_separations(p, w.points[0], w.points[1], w.step)
    assert seps[0] <= 1e-6
    assert seps[-1] > 1.0
    assert np.all(seps[:-1] <= 1.0)


def test_sensitivity_gap_matches_doubling_oracle():
    # within the slice the angular gap doubles each step, so the chord
    # distance at step k should be 2 |sin(eps * 2^(k-1))| where eps is the
    # initial angular gap recovered from the witness pair
    p = np.array([1.0, 0.0])
    x = angle_point(Angle(radians=0.1))
    w = sensitivity_witness(p, x, delta=1e-6, lam=1.0, max_k=25)
    seps = replay_separations(p, w.points[0], w.points[1], w.step)
    eps = 2.0 * math.asin(seps[0] / 2.0)
    for k in range(w.step + 1):
        predicted = 2.0 * abs(math.sin(eps * 2.0**k / 2.0))
        assert seps[k] == pytest.approx(predicted, rel=1e-6, abs=1e-12)


def test_sensitivity_immediate_when_delta_large():
    p = np.array([1.0, 0.0])
    x = angle_point(Angle(radians=0.3))
    w = sensitivity_witness(p, x, delta=1.5, lam=1.0, max_k=5)
    assert w.step == 0  # the perturbation itself is already separated


def test_sensitivity_inside_a_slice_of_the_two_sphere():
    p = np.array([1.0, 0.0, 0.0])
    x = np.array([0.0, 1.0, 0.0])
    w = sensitivity_witness(p, x, delta=1e-6, lam=1.0, max_k=25)
    assert w.step <= 21
    # the witness pair never leaves the z = 0 slice circle
    assert abs(w.points[1][2]) <= 1e-15


def test_sensitivity_at_the_pole_itself():
    p = np.array([0.0, 0.0, 1.0])
    w = sensitivity_witness(p, p, delta=1e-6, lam=1.0, max_k=25)
    assert np.linalg.norm(w.points[0] - w.points[1]) <= 1e-6
    assert w.separation > 1.0


def test_sensitivity_budget_exceeded():
    p = np.array([1.0, 0.0])
    x = angle_point(Angle(radians=0.1))
    with pytest.raises(BudgetExceeded):
        sensitivity_witness(p, x, delta=1e-6, lam=1.0, max_k=3)


def test_sensitivity_near_diameter_separation():
    # a doubled gap can overshoot the window for lam near the diameter 2;
    # the search keeps going until the modular gap lands inside
    p = np.array([1.0, 0.0])
    x = angle_point(Angle(radians=0.1))
    w = sensitivity_witness(p, x, delta=1e-6, lam=1.99, max_k=60)
    assert w.separation > 1.99


def test_disk_sensitivity_interior_point():
    p = np.array([1.0, 0.0, 0.0])
    x = np.array([0.2, 0.3, -0.1])
    w = disk_sensitivity_witness(p, x, delta=1e-6, lam=1.0, max_k=80)
    assert np.linalg.norm(w.points[0] - w.points[1]) <= 1e-6
    assert np.linalg.norm(w.points[1]) < 1.0
    seps = replay_separations(p, w.points[0], w.points[1], w.step, renormalize="off")
    assert seps[-1] > 1.0


def test_disk_sensitivity_boundary_point_uses_sphere_route():
    p = np.array([1.0, 0.0, 0.0])
    x = np.array([0.0, 0.0, 1.0])
    w = disk_sensitivity_witness(p, x, delta=1e-6, lam=1.0, max_k=40)
    assert abs(np.linalg.norm(w.points[1]) - 1.0) <= 1e-12


def test_disk_sensitivity_on_the_interval():
    p = np.array([1.0])
    w = disk_sensitivity_witness(p, np.array([0.3]), delta=1e-6, lam=1.0, max_k=80)
    assert w.separation > 1.0
    w_edge = disk_sensitivity_witness(p, np.array([-1.0]), delta=1e-6, lam=1.0, max_k=80)
    assert w_edge.separation > 1.0


def test_disk_sensitivity_at_the_center():
    # x . p = 0 there, so only the perturbed axis coordinate moves at first
    p = np.array([0.0, 1.0, 0.0])
    w = disk_sensitivity_witness(p, np.zeros(3), delta=1e-6, lam=1.0, max_k=80)
    assert w.separation > 1.0
    assert np.linalg.norm(w.points[0] - w.points[1]) <= 1e-6


# --- accessibility ------------------------------------------------------


def test_accessibility_same_ball_is_trivial():
    p = np.array([1.0, 0.0])
    ball = OpenBall(np.array([0.0, 1.0]), 0.1)
    w = accessibility_witness(p, ball, ball, lam=1e-10)
    assert w.step == 1
    assert w.separation == 0.0


def test_accessibility_antipodal_circle_balls():
    # chord radius 0.1 gives angular radius 2*asin(0.05), so five doublings
    # cover the circle: ceil(log2(pi / 0.10004)) = 5
    p = np.array([1.0, 0.0])
    u = OpenBall(np.array([0.0, 1.0]), 0.1)
    v = OpenBall(np.array([0.0, -1.0]), 0.1)
    w = accessibility_witness(p, u, v, lam=1e-10)
    assert w.step == 5
    assert w.separation <= 1e-10
    assert u.contains(w.points[0])
    assert v.contains(w.points[1])
    # both endpoints land on the pole, which is fixed
    final_u = replay_separations(p, w.points[0], p, w.step)[-1]
    final_v = replay_separations(p, w.points[1], p, w.step)[-1]
    assert final_u <= 1e-12 and final_v <= 1e-12


def test_accessibility_on_the_two_sphere():
    p = np.array([1.0, 0.0, 0.0])
    u = OpenBall(np.array([0.0, 1.0, 0.0]), 0.1)
    v = OpenBall(np.array([0.0, 0.0, 1.0]), 0.1)
    w = accessibility_witness(p, u, v, lam=1e-10)
    assert w.separation <= 1e-10
    assert u.contains(w.points[0]) and v.contains(w.points[1])
    assert w.step <= 10


def test_accessibility_disk_balls_via_lift():
    p = np.array([1.0, 0.0, 0.0])
    u = OpenBall(np.array([0.3, 0.2, 0.0]), 0.1, "disk")
    v = OpenBall(np.array([-0.4, 0.1, 0.2]), 0.1, "disk")
    w = accessibility_witness(p, u, v, lam=1e-9)
    assert u.contains(w.points[0]) and v.contains(w.points[1])
    assert np.linalg.norm(w.points[0]) <= 1.0
    assert w.separation <= 1e-10


def test_accessibility_interval_balls():
    p = np.array([1.0])
    u = OpenBall(np.array([0.5]), 0.1, "disk")
    v = OpenBall(np.array([-0.25]), 0.1, "disk")
    w = accessibility_witness(p, u, v, lam=1e-9)
    assert abs(w.points[0][0] - 0.5) < 0.1
    assert abs(w.points[1][0] + 0.25) < 0.1
    assert w.separation <= 1e-9


def test_accessibility_rejects_mixed_spaces():
    p = np.array([1.0, 0.0])
    with pytest.raises(ValueError):
        accessibility_witness(p, OpenBall(np.array([0.0, 1.0]), 0.1),
                              OpenBall(np.array([0.0, 0.5]), 0.1, "disk"), 1e-9)


def test_accessibility_lopsided_radii_with_pole_inside():
    # a ball containing the pole and a much smaller target ball: the dyadic
    # order follows the smaller ball
    p = np.array([1.0, 0.0])
    u = OpenBall(p, 0.5)
    v = OpenBall(angle_point(Angle(radians=2.0)), 0.001)
    w = accessibility_witness(p, u, v, lam=1e-9)
    assert u.contains(w.points[0]) and v.contains(w.points[1])
    assert w.separation <= 1e-9


# --- transitivity probe and confinement ---------------------------------


def test_transitivity_hit_on_circle():
    # 0.05-radius sets on the circle are covered after six doublings; the
    # seeded probe finds a hit within the documented extra step
    p = np.array([1.0, 0.0])
    u = OpenBall(angle_point(Angle(radians=0.7)), 0.05)
    v = OpenBall(angle_point(Angle(radians=3.0)), 0.05)
    probe = transitivity_probe(p, u, v, max_k=20, samples=200, seed=0)
    assert probe.hit
    assert probe.first_hit_step <= 8
    # replay the reported sample
    orbit = iterate(p, probe.start_point, probe.first_hit_step)
    assert np.linalg.norm(orbit.final - v.center) < v.radius


def test_transitivity_same_set_hits():
    p = np.array([1.0, 0.0])
    u = OpenBall(angle_point(Angle(radians=2.0)), 0.1)
    probe = transitivity_probe(p, u, u, max_k=30, samples=100, seed=1)
    assert probe.hit and probe.first_hit_step >= 1


def test_transitivity_blocked_on_two_sphere():
    p = np.array([1.0, 0.0, 0.0])
    u = OpenBall(np.array([0.0, 1.0, 0.0]), 0.05)
    v = OpenBall(np.array([0.0, 0.0, 1.0]), 0.05)
    probe = transitivity_probe(p, u, v, max_k=10000, samples=100, seed=2)
    assert not probe.hit
    assert probe.first_hit_step is None


def test_transitivity_probe_in_disk_spaces():
    # slice confinement blocks out-of-plane targets in the 3-disk too,
    # while the 1-disk dynamics reaches any interval quickly
    p = np.array([1.0, 0.0, 0.0])
    u = OpenBall(np.array([0.0, 0.5, 0.0]), 0.1, "disk")
    v = OpenBall(np.array([0.0, 0.0, 0.5]), 0.1, "disk")
    assert not transitivity_probe(p, u, v, max_k=300, samples=30, seed=3).hit
    probe = transitivity_probe(np.array([1.0]), OpenBall(np.array([0.3]), 0.05, "disk"),
                               OpenBall(np.array([-0.5]), 0.05, "disk"),
                               max_k=50, samples=20, seed=4)
    assert probe.hit


def test_confinement_certificate_coordinate_slice():
    p = np.array([1.0, 0.0, 0.0])
    x0 = np.array([0.0, 1.0, 0.0])
    r = np.array([0.0, 0.0, 1.0])
    cert = slice_confinement_certificate(p, x0, r, steps=10000)
    assert cert.certified
    assert cert.max_slice_residual <= 1e-9
    # the z = 0 circle keeps chord distance sqrt(2) from the north pole
    assert cert.ref_gap == pytest.approx(math.sqrt(2.0), abs=1e-12)
    assert cert.min_distance_to_ref == pytest.approx(math.sqrt(2.0), abs=1e-12)


def test_confinement_certificate_random_starts():
    rng = np.random.default_rng(12)
    p = random_unit(rng, 3)
    for _ in range(5):
        x0 = random_unit(rng, 3)
        ref = random_unit(rng, 3)
        gram = np.array([[np.dot(a, b) for b in (p, x0, ref)] for a in (p, x0, ref)])
        if abs(np.linalg.det(gram)) < 0.05:
            continue
        cert = slice_confinement_certificate(p, x0, ref, steps=10000)
        assert cert.max_slice_residual <= 1e-9


def test_confinement_rejects_coplanar_configuration():
    p = np.array([1.0, 0.0, 0.0])
    x0 = np.array([0.0, 1.0, 0.0])
    ref = (p + x0) / np.linalg.norm(p + x0)
    with pytest.raises(DegenerateConfiguration):
        slice_confinement_certificate(p, x0, ref, steps=10)


def test_confinement_disk_space():
    p = np.array([1.0, 0.0, 0.0])
    x0 = np.array([0.0, 0.7, 0.0])
    ref = np.array([0.0, 0.0, 0.8])
    cert = slice_confinement_certificate(p, x0, ref, steps=2000, space="disk")
    assert cert.certified
    assert cert.ref_gap == pytest.approx(0.8, abs=1e-12)


# --- periodic points ----------------------------------------------------


def test_periodic_k1_is_the_pole_angle():
    angles = periodic_angles(Angle.exact(2, 7), 1)
    assert [a.turns for a in angles] == [Fraction(2, 7)]


def test_periodic_k2_at_alpha_zero():
    angles = periodic_angles(Angle.exact(0), 2)
    assert [a.turns for a in angles] == [Fraction(0), Fraction(1, 3), Fraction(2, 3)]


def test_periodic_counts_and_gaps():
    for k in range(1, 13):
        angles = periodic_angles(Angle.exact(1, 3), k)
        assert len(angles) == 2**k - 1
        assert len({a.turns for a in angles}) == len(angles)  # pairwise distinct
        assert max_gap_turns(angles) == Fraction(1, 2**k - 1)


def test_periodic_independent_doubling_oracle():
    # re-verify k-periodicity with raw Fractions, independently of the library
    alpha = Fraction(1, 3)
    for angle in periodic_angles(Angle.exact(1, 3), 5):
        t = angle.turns
        for _ in range(5):
            t = (2 * t - alpha) % 1
        assert t == angle.turns


def test_periodic_minimal_periods():
    # at alpha = 0 the angle j/(2^k - 1) has minimal period equal to the
    # multiplicative order of 2 modulo the reduced denominator
    def order_of_two(m):
        o, v = 1, 2 % m
        while v != 1:
            v = (2 * v) % m
            o += 1
        return o

    angles = periodic_angles(Angle.exact(0), 4)
    for angle in angles:
        t = angle.turns
        if t == 0:
            continue
        expected = order_of_two(t.denominator)
        s = t
        seen = 0
        for step in range(1, 5):
            s = (2 * s) % 1
            seen = step
            if s == t:
                break
        assert seen == expected
        assert 4 % expected == 0


def test_periodic_requires_exact_alpha():
    with pytest.raises(ValueError):
        periodic_angles(Angle(radians=0.5), 3)


# --- Lyapunov -----------------------------------------------------------


def test_lyapunov_circle_is_exactly_log_two():
    assert lyapunov_estimate("circle", 0.37, 1000) == math.log(2.0)
    assert lyapunov_estimate("slice", 0.0, 5000) == math.log(2.0)


def test_lyapunov_logistic_converges():
    value = lyapunov_estimate("logistic", 0.123, 200000)
    assert value == pytest.approx(math.log(2.0), abs=2e-2)


def test_lyapunov_singular_start():
    with pytest.raises(DerivativeSingular):
        lyapunov_estimate("logistic", 0.5, 1000)


def test_lyapunov_validates_input():
    with pytest.raises(ValueError):
        lyapunov_estimate("circle", 0.1, 10)
    with pytest.raises(ValueError):
        lyapunov_estimate("henon", 0.1, 2000)


# --- mixing -------------------------------------------------------------


def test_mixing_settle_equals_coverage_for_small_arcs():
    # half-width 1/100 turn needs ceil(log2(50)) = 6 doublings to cover
    u = CircleArc(Fraction(1, 8), Fraction(1, 100))
    v = CircleArc(Fraction(5, 8), Fraction(1, 100))
    result = mixing_probe(Angle.exact(0), u, v, horizon=20)
    assert result.coverage_step == 6
    assert result.settle_step <= 6


def test_mixing_full_arcs_settle_immediately():
    full = CircleArc(Fraction(0), Fraction(1, 2))
    small = CircleArc(Fraction(1, 3), Fraction(1, 50))
    assert mixing_probe(Angle.exact(0), full, small, horizon=3).settle_step == 1
    assert mixing_probe(Angle.exact(0), small, full, horizon=10).settle_step == 1


def test_mixing_horizon_must_reach_coverage():
    u = CircleArc(Fraction(0), Fraction(1, 100))
    with pytest.raises(ValueError):
        mixing_probe(Angle.exact(0), u, u, horizon=3)


def test_mixing_against_exact_sample_oracle():
    # closed form of the m-fold step: theta_m = 2^m theta - (2^m - 1) alpha.
    # any sampled point of U landing in V forces an intersection verdict
    alpha = Angle.exact(1, 5)
    u = CircleArc(Fraction(1, 16), Fraction(1, 40))
    v = CircleArc(Fraction(2, 3), Fraction(1, 40))
    horizon = 12
    result = mixing_probe(alpha, u, v, horizon)
    arc = u
    for m in range(1, horizon + 1):
        arc = arc.step(alpha.turns)
        sampled_hit = False
        for i in range(-60, 61):
            theta = u.center + Fraction(i, 121) * u.half_width
            theta_m = (2**m * theta - (2**m - 1) * alpha.turns) % 1
            if v.contains_turns(theta_m):
                sampled_hit = True
                break
        if sampled_hit:
            assert arc.intersects(v)
        if m >= result.settle_step:
            assert arc.intersects(v)


def test_folded_settle_for_the_interval():
    u = CircleArc(Fraction(1, 5), Fraction(1, 64))
    assert folded_settle_step(u, CircleArc(Fraction(3, 8), Fraction(1, 64)),
                              horizon=coverage_step(u) + 8) <= coverage_step(u) + 1


# --- classification and reports -----------------------------------------


def test_classify_labels():
    assert classify(True, True, True, True) == "Devaney"
    assert classify(True, True, False, False) == "Kato"
    assert classify(False, True, False, False) == "neither"
    assert classify(True, None, None, None) == "inconclusive"


def test_reports_are_consistent_and_labelled():
    r1 = circle_chaos_report(Angle.exact(1, 7), seed=5)
    r2 = interval_chaos_report(-1, seed=5)
    r3 = sphere_chaos_report(np.array([0.0, 1.0, 0.0]), seed=5)
    r4 = disk_chaos_report(np.array([0.0, 1.0, 0.0]), seed=5)
    for report in (r1, r2, r3, r4):
        check_report_consistency(report)
    assert r1.classification == "Devaney" and r2.classification == "Devaney"
    assert r3.classification == "Kato" and r4.classification == "Kato"
    assert r3.transitive is False and r3.transitivity_evidence["certified"]
    assert r4.transitive is False and not r4.transitivity_evidence["probe_hit"]
    assert r1.separation_constant == 1.0  # the documented default


def test_report_consistency_checker_rejects_contradictions():
    good = sphere_chaos_report(np.array([1.0, 0.0, 0.0]), seed=3)
    bad = ChaosReport(**{**good.__dict__, "classification": "Devaney"})
    with pytest.raises(ValueError):
        check_report_consistency(bad)


def test_reports_are_deterministic():
    a = sphere_chaos_report(np.array([0.0, 0.0, 1.0]), seed=11)
    b = sphere_chaos_report(np.array([0.0, 0.0, 1.0]), seed=11)
    assert json.dumps(_jsonable(a.__dict__), sort_keys=True, default=str) == \
        json.dumps(_jsonable(b.__dict__), sort_keys=True, default=str)
