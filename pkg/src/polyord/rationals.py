"""Exact rational scalars and the tagged infinity used for weights and valuations.

All geometric quantities in this package are ``fractions.Fraction`` values
(always reduced, positive denominator, no rounding).  Points that fall
outside a cone, and valuations of zero, are the tagged singleton ``INF``
rather than any numeric sentinel.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

# Exact rational scalar used throughout; stdlib Fraction already maintains
# the reduced-form invariant (gcd(|num|, den) == 1, den >= 1).
ExactRational = Fraction


class Infinity:
    """Tagged positive infinity.  Compares greater than every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("polyord.INF")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and other > 0:
            return self
        raise ArithmeticError("INF may only be scaled by a positive rational")

    __rmul__ = __mul__


INF = Infinity()

RationalOrInf = Union[Fraction, Infinity]


def is_finite(value: RationalOrInf) -> bool:
    return value is not INF


def parse_rational(text) -> Fraction:
    """Parse an int, float-free "num/den" string, or plain integer string."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, str):
        return Fraction(text)
    raise ValueError(f"not a rational: {text!r}")


def format_rational(value: Fraction):
    """Render integers as ints and proper fractions as "num/den" strings."""
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"
