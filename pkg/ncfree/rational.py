"""Exact rational coefficients.

All coefficient arithmetic goes through :class:`fractions.Fraction`. This
module is the single place that decides what counts as an acceptable
coefficient. Kernels that run on sympy's ``QQ`` domain cross the boundary
through :func:`to_qq` and :func:`from_qq`.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from sympy.polys.domains import QQ

from .errors import ValidationError

Rational = Fraction
RationalLike = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Convert an int, a ``"p/q"`` string or a Fraction to a Fraction.

    Floats are rejected: a float has already lost exactness.
    """
    if isinstance(value, bool):
        raise ValidationError(f"Not a rational coefficient: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"Not a rational literal: {value!r}") from e
    raise ValidationError(f"Not a rational coefficient: {value!r} ({type(value).__name__})")


def to_qq(value: Fraction):
    """The same number as an element of sympy's QQ."""
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``"3"``, ``"-1/4"``."""
    return str(value)
