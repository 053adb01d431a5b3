"""The pole map: evaluation, iteration, preimages, factors, equivariance."""
import math

import numpy as np
import pytest

from polemap import (
    Angle,
    DimensionMismatch,
    NoPreimage,
    NotInterior,
    angle_point,
    chebyshev_projection,
    chebyshev_step,
    equivariance_pair,
    interval_conjugacy,
    iterate,
    pole_map,
    pole_map_rows,
    preimage_in_disk,
    preimage_on_sphere,
    rotate_pole_to_axis,
)
from polemap.geometry import random_in_disk, random_rotation, random_unit


def test_doubles_the_circle_angle():
    # with the pole at angle 0, a point at angle theta maps to angle 2*theta
    p = np.array([1.0, 0.0])
    x = angle_point(Angle(radians=math.pi / 6))
    y = pole_map(p, x)
    assert np.allclose(y, [math.cos(math.pi / 3), math.sin(math.pi / 3)], atol=1e-15)


def test_orthogonal_points_map_to_antipode():
    p = np.array([1.0, 0.0, 0.0])
    x = np.array([0.0, 1.0, 0.0])
    assert np.allclose(pole_map(p, x), -p, atol=1e-15)


def test_pole_is_fixed():
    p = random_unit(np.random.default_rng(0), 4)
    assert np.allclose(pole_map(p, p), p, atol=1e-12)


def test_map_is_even_in_x():
    # quadratic in x: antipodal points share an image
    rng = np.random.default_rng(20)
    for _ in range(100):
        d = int(rng.integers(2, 7))
        p = random_unit(rng, d)
        x = random_unit(rng, d)
        assert np.array_equal(pole_map(p, x), pole_map(p, -x))


def test_circle_formula_with_arbitrary_pole_angle():
    # a pole at angle alpha sends the point at angle theta to 2*theta - alpha
    rng = np.random.default_rng(21)
    for _ in range(200):
        alpha = rng.uniform(0.0, 2.0 * math.pi)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        p = np.array([math.cos(alpha), math.sin(alpha)])
        x = np.array([math.cos(theta), math.sin(theta)])
        expected = np.array([math.cos(2.0 * theta - alpha), math.sin(2.0 * theta - alpha)])
        assert np.linalg.norm(pole_map(p, x) - expected) <= 1e-12


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        pole_map(np.array([1.0, 0.0]), np.array([1.0, 0.0, 0.0]))


def test_unit_norm_preserved_randomly():
    rng = np.random.default_rng(1)
    for dim in range(1, 7):
        d = dim + 1
        for _ in range(500):
            p = random_unit(rng, d)
            x = random_unit(rng, d)
            assert abs(np.linalg.norm(pole_map(p, x)) - 1.0) <= 1e-12


def test_disk_mapped_inside_disk():
    rng = np.random.default_rng(2)
    for _ in range(2000):
        d = int(rng.integers(2, 8))
        p = random_unit(rng, d)
        x = random_in_disk(rng, d) * (1.0 - 1e-12)
        assert np.linalg.norm(pole_map(p, x)) < 1.0


def test_rows_agree_with_scalar():
    rng = np.random.default_rng(3)
    p = random_unit(rng, 3)
    xs = rng.normal(size=(50, 3))
    batched = pole_map_rows(p, xs)
    for i in range(50):
        assert np.allclose(batched[i], pole_map(p, xs[i]), atol=1e-15)


# --- preimages ---------------------------------------------------------


def test_sphere_preimage_of_pole_is_pole():
    p = np.array([0.0, 1.0])
    assert np.allclose(preimage_on_sphere(p, p), p, atol=1e-15)


def test_sphere_preimage_quarter_turn():
    p = np.array([1.0, 0.0])
    y = np.array([0.0, 1.0])
    x = preimage_on_sphere(p, y)
    assert np.allclose(x, [1.0 / math.sqrt(2.0)] * 2, atol=1e-15)
    assert np.linalg.norm(pole_map(p, x) - y) <= 1e-15


def test_sphere_preimage_antipode_branch():
    p = np.array([1.0, 0.0, 0.0])
    x = preimage_on_sphere(p, -p)
    assert abs(np.dot(x, p)) <= 1e-12
    assert np.linalg.norm(pole_map(p, x) - (-p)) <= 1e-15


def test_sphere_preimage_antipode_impossible_on_zero_sphere():
    with pytest.raises(NoPreimage):
        preimage_on_sphere(np.array([1.0]), np.array([-1.0]))


def test_sphere_preimage_roundtrip_random():
    rng = np.random.default_rng(4)
    for _ in range(2000):
        d = int(rng.integers(2, 8))
        p = random_unit(rng, d)
        y = random_unit(rng, d)
        assert np.linalg.norm(pole_map(p, preimage_on_sphere(p, y)) - y) <= 1e-10


def test_disk_preimage_frozen_values():
    p = np.array([1.0, 0.0])
    # target at the origin: scaling a = sqrt(1/2), direction (1, 0)
    x = preimage_in_disk(p, np.array([0.0, 0.0]))
    assert np.allclose(x, [math.sqrt(0.5), 0.0], atol=1e-15)
    assert np.linalg.norm(pole_map(p, x)) <= 1e-15
    # target (0.5, 0): a = sqrt(2.25/3) = sqrt(3)/2 along (1, 0)
    x = preimage_in_disk(p, np.array([0.5, 0.0]))
    assert np.allclose(x, [math.sqrt(3.0) / 2.0, 0.0], atol=1e-15)
    assert np.linalg.norm(pole_map(p, x) - [0.5, 0.0]) <= 1e-15
    # target (0, 0.5), hand-computed direction (2, 1)/sqrt(5) scaled by sqrt(5/8)
    x = preimage_in_disk(p, np.array([0.0, 0.5]))
    assert np.allclose(x, [0.7071067811865476, 0.3535533905932738], atol=1e-12)
    assert np.linalg.norm(pole_map(p, x) - [0.0, 0.5]) <= 1e-14


def test_disk_preimage_stays_interior_and_roundtrips():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        d = int(rng.integers(2, 8))
        p = random_unit(rng, d)
        y = random_in_disk(rng, d) * (1.0 - 1e-8)
        x = preimage_in_disk(p, y)
        assert np.linalg.norm(x) < 1.0
        assert np.linalg.norm(pole_map(p, x) - y) <= 1e-10


def test_disk_preimage_rejects_boundary():
    p = np.array([1.0, 0.0])
    with pytest.raises(NotInterior):
        preimage_in_disk(p, np.array([0.0, 1.0]))
    with pytest.raises(NotInterior):
        preimage_in_disk(p, np.array([0.0, 1.0 - 1e-10]))


# --- iteration ---------------------------------------------------------


def test_zero_steps_returns_start():
    p = np.array([1.0, 0.0])
    x0 = np.array([0.0, 1.0])
    orbit = iterate(p, x0, 0)
    assert orbit.steps == 0
    assert np.array_equal(orbit.points[0], x0)


def test_period_three_at_one_seventh_turn():
    # exact oracle: 1/7 -> 2/7 -> 4/7 -> 8/7 = 1/7 (mod 1)
    p = np.array([1.0, 0.0])
    x0 = angle_point(Angle.exact(1, 7))
    orbit = iterate(p, x0, 3)
    assert np.linalg.norm(orbit.final - x0) <= 1e-12


def test_long_orbit_drift_and_renormalization():
    rng = np.random.default_rng(6)
    p = random_unit(rng, 3)
    x0 = random_unit(rng, 3)
    renormed = iterate(p, x0, 1000, renormalize="every-step")
    assert renormed.max_norm_drift <= 1e-14
    free = iterate(p, x0, 1000, renormalize="off")
    assert np.all(np.isfinite(free.norm_drift))
    assert free.max_norm_drift >= 0.0  # reported, whatever it accumulated to


def test_slice_residual_is_zero_on_coordinate_slice():
    p = np.array([1.0, 0.0, 0.0])
    x0 = np.array([0.0, 1.0, 0.0])
    orbit = iterate(p, x0, 200)
    assert orbit.points[:, 2].max() == 0.0  # third coordinate never moves
    assert orbit.max_slice_residual <= 1e-15


def test_iterate_rejects_bad_policy():
    with pytest.raises(ValueError):
        iterate(np.array([1.0, 0.0]), np.array([0.0, 1.0]), 5, renormalize="sometimes")


# --- interval conjugacy -------------------------------------------------


def test_conjugacy_values():
    assert interval_conjugacy(1, 0.5) == pytest.approx(1.0, abs=1e-15)
    assert interval_conjugacy(1, 0.0) == pytest.approx(0.0, abs=1e-15)
    # hand algebra: h(0.25) = -0.5, map gives 0.5, h^{-1}(0.5) = 0.75
    assert interval_conjugacy(-1, 0.25) == pytest.approx(0.75, abs=1e-15)


def test_conjugacy_matches_logistic_on_grid():
    x = np.linspace(0.0, 1.0, 100001)
    target = 4.0 * x * (1.0 - x)
    for pole in (1, -1):
        assert np.max(np.abs(interval_conjugacy(pole, x) - target)) <= 1e-12


def test_conjugacy_domain_errors():
    with pytest.raises(ValueError):
        interval_conjugacy(2, 0.5)
    with pytest.raises(ValueError):
        interval_conjugacy(1, 1.5)


# --- Chebyshev factor ---------------------------------------------------


def test_chebyshev_values():
    p = np.array([1.0, 0.0])
    assert chebyshev_projection(p, p) == 1.0
    assert chebyshev_step(1.0) == 1.0
    assert chebyshev_step(0.0) == -1.0
    assert chebyshev_step(0.5) == -0.5


def test_chebyshev_semiconjugacy_random():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        d = int(rng.integers(2, 8))
        p = random_unit(rng, d)
        x = random_in_disk(rng, d) if rng.random() < 0.5 else random_unit(rng, d)
        t = chebyshev_projection(p, x)
        assert abs(chebyshev_projection(p, pole_map(p, x)) - chebyshev_step(t)) <= 1e-12


# --- equivariance -------------------------------------------------------


def test_equivariance_identity():
    p = np.array([0.0, 1.0, 0.0])
    x = np.array([0.6, 0.0, 0.8])
    lhs, rhs = equivariance_pair(np.eye(3), p, x)
    assert np.array_equal(lhs, rhs)
    assert np.allclose(lhs, pole_map(p, x), atol=1e-15)


def test_equivariance_random_rotations():
    rng = np.random.default_rng(8)
    for _ in range(500):
        d = int(rng.integers(2, 7))
        r = random_rotation(rng, d)
        p = random_unit(rng, d)
        x = random_unit(rng, d)
        lhs, rhs = equivariance_pair(r, p, x)
        assert np.linalg.norm(lhs - rhs) <= 1e-12


def test_dropping_the_last_coordinate_is_a_semiconjugacy():
    # with an equatorial pole, forgetting the last coordinate intertwines the
    # sphere dynamics one dimension up with the disk dynamics below
    rng = np.random.default_rng(9)
    for _ in range(200):
        d = int(rng.integers(2, 6))
        p = random_unit(rng, d)
        lifted_pole = np.append(p, 0.0)
        x_hat = random_unit(rng, d + 1)
        upstairs = pole_map(lifted_pole, x_hat)[:-1]
        downstairs = pole_map(p, x_hat[:-1])
        assert np.linalg.norm(upstairs - downstairs) <= 1e-15


def test_rotating_pole_to_axis_preserves_dynamics():
    rng = np.random.default_rng(10)
    p = random_unit(rng, 4)
    r = rotate_pole_to_axis(p)
    x = random_unit(rng, 4)
    lhs, rhs = equivariance_pair(r, p, x)
    assert np.linalg.norm(lhs - rhs) <= 1e-12
