"""Exact and float angle arithmetic."""
import math
from fractions import Fraction

import numpy as np
import pytest

from polemap import Angle, MixedAngleForms, angle_orbit, angle_point, angle_step, parse_angle


def test_exact_normalization():
    a = Angle(turns=Fraction(9, 6))
    assert a.turns == Fraction(1, 2)  # reduced and wrapped into [0, 1)
    assert Angle.exact(-1, 4).turns == Fraction(3, 4)


def test_float_normalization():
    a = Angle(radians=-math.pi)
    assert 0.0 <= a.radians < 2.0 * math.pi
    assert a.radians == pytest.approx(math.pi)


def test_exactly_one_representation():
    with pytest.raises(ValueError):
        Angle()
    with pytest.raises(ValueError):
        Angle(turns=Fraction(1, 2), radians=1.0)
    with pytest.raises(ValueError):
        Angle(radians=float("nan"))


def test_step_pure_doubling_float():
    out = angle_step(Angle(radians=0.0), Angle(radians=0.3))
    assert out.radians == pytest.approx(0.6, abs=1e-15)


def test_step_fixed_point_at_pole_angle():
    # solving 2*theta - alpha = theta gives theta = alpha
    alpha = Angle(radians=1.234)
    assert angle_step(alpha, alpha).radians == pytest.approx(alpha.radians, abs=1e-15)
    exact = Angle.exact(3, 11)
    assert angle_step(exact, exact).turns == exact.turns


def test_step_exact_wraps():
    # exact rational arithmetic: 2*(2/3) - 1/3 = 1 turn, i.e. angle 0
    out = angle_step(Angle.exact(1, 3), Angle.exact(2, 3))
    assert out.turns == Fraction(0)


def test_step_rejects_mixed_forms():
    with pytest.raises(MixedAngleForms):
        angle_step(Angle.exact(1, 3), Angle(radians=0.5))


def test_orbit_period_seven():
    # 2^3 = 8 = 1 mod 7, so 1/7 of a turn has period 3 under doubling
    orbit = angle_orbit(Angle.exact(0), Angle.exact(1, 7), 3)
    assert [a.turns for a in orbit] == [Fraction(1, 7), Fraction(2, 7), Fraction(4, 7), Fraction(1, 7)]


def test_orbit_is_bit_exact_far_out():
    orbit = angle_orbit(Angle.exact(5, 13), Angle.exact(5, 13), 500)
    assert all(a.turns == Fraction(5, 13) for a in orbit)  # fixed point stays put


def test_angle_point():
    x = angle_point(Angle.exact(1, 4))
    assert np.allclose(x, [0.0, 1.0], atol=1e-15)


def test_parse_angle():
    assert parse_angle("2/7").turns == Fraction(2, 7)
    assert parse_angle("0.5").radians == pytest.approx(0.5)
    assert parse_angle("3", exact=True).turns == Fraction(0)  # 3 whole turns
    with pytest.raises(ValueError):
        parse_angle("0.5", exact=True)


def test_str_round_trip():
    assert str(Angle.exact(2, 7)) == "2/7"
    assert parse_angle(str(Angle.exact(2, 7))).turns == Fraction(2, 7)
