"""Exact rational scalars: parsing, "p/q" formatting and the circle metric."""

from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in '.eE'):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q" string, denominator always written."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def frac_part(x: Fraction) -> Fraction:
    """Reduce a lift coordinate into [0, 1)."""
    return x - (x.numerator // x.denominator)


def circle_distance(x: Fraction, y: Fraction) -> Fraction:
    d = abs(frac_part(x) - frac_part(y))
    return min(d, 1 - d)
