"""Circle positions and the angle recursion theta -> 2*theta - alpha.

Angles come in two representations:

* exact -- a rational fraction of a full turn (``Fraction`` r means the
  angle 2*pi*r), reduced into [0, 1).  Doubling and stepping are then
  computed in integer arithmetic, so periodicity checks are bit-exact.
* float -- plain radians, reduced into [0, 2*pi).  One mantissa bit of
  accuracy is lost per doubling, which corrupts periodicity past ~50 steps;
  use the exact form for anything periodic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import MixedAngleForms

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Angle:
    """A position on the circle, in exactly one of the two representations."""

    turns: Fraction | None = None
    radians: float | None = None

    def __post_init__(self):
        if (self.turns is None) == (self.radians is None):
            raise ValueError("set exactly one of turns / radians")
        if self.turns is not None:
            object.__setattr__(self, "turns", Fraction(self.turns) % 1)
        else:
            r = float(self.radians)
            if not math.isfinite(r):
                raise ValueError("radians must be finite")
            object.__setattr__(self, "radians", r % TWO_PI)

    @staticmethod
    def exact(numerator, denominator=None) -> "Angle":
        """Angle at 2*pi * numerator/denominator."""
        if denominator is None:
            return Angle(turns=Fraction(numerator))
        return Angle(turns=Fraction(numerator, denominator))

    @staticmethod
    def from_radians(value: float) -> "Angle":
        return Angle(radians=value)

    @property
    def is_exact(self) -> bool:
        return self.turns is not None

    def to_radians(self) -> float:
        if self.turns is not None:
            return float(self.turns) * TWO_PI
        return self.radians

    def __str__(self) -> str:
        if self.turns is not None:
            return f"{self.turns.numerator}/{self.turns.denominator}"
        return repr(self.radians)


def parse_angle(text: str, exact: bool = False) -> Angle:
    """Parse a command-line angle.

    ``p/q`` means the exact angle 2*pi*p/q; a plain decimal means float
    radians.  With ``exact=True`` only rational input is accepted.
    """
    text = text.strip()
    if "/" in text:
        return Angle(turns=Fraction(text))
    if exact:
        if "." in text or "e" in text.lower():
            raise ValueError(f"exact mode requires a rational angle 'p/q', got {text!r}")
        return Angle(turns=Fraction(int(text)))
    return Angle(radians=float(text))


def step_turns(alpha: Fraction, theta: Fraction) -> Fraction:
    """One exact step of the recursion: (2*theta - alpha) mod one turn."""
    return (2 * theta - alpha) % 1


def angle_step(alpha: Angle, theta: Angle) -> Angle:
    """2*theta - alpha, reduced mod a full turn.

    Both angles must use the same representation; the exact branch stays in
    rational arithmetic.
    """
    if alpha.is_exact and theta.is_exact:
        return Angle(turns=step_turns(alpha.turns, theta.turns))
    if not alpha.is_exact and not theta.is_exact:
        return Angle(radians=(2.0 * theta.radians - alpha.radians) % TWO_PI)
    raise MixedAngleForms("cannot mix exact and float angles in one step")


def angle_orbit(alpha: Angle, theta0: Angle, steps: int) -> list[Angle]:
    """Orbit [theta0, theta1, ..., theta_steps] of the angle recursion."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    out = [theta0]
    t = theta0
    for _ in range(steps):
        t = angle_step(alpha, t)
        out.append(t)
    return out


def angle_point(theta: Angle) -> np.ndarray:
    """Ambient point (cos theta, sin theta) of the unit circle in R^2."""
    r = theta.to_radians()
    return np.array([math.cos(r), math.sin(r)])


def chord_gap(a: Angle, b: Angle) -> float:
    """Chord distance between two positions on a unit circle: 2|sin((a-b)/2)|."""
    return 2.0 * abs(math.sin(0.5 * (a.to_radians() - b.to_radians())))
