"""Exact rational scalars: parsing, rendering and falling factorials."""

import re
from fractions import Fraction
from typing import Union

from shared.errors import InvalidArgumentError

# The only scalar type anywhere; Fraction keeps lowest terms with a positive denominator.
Rational = Fraction

RationalLike = Union[int, str, Fraction]

_FRACTION_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    """
    Parse "p", "-p" or "p/q" into an exact fraction.

    Decimal and scientific notations are rejected.

    Args:
        text: Fraction text

    Returns:
        Parsed Fraction

    Raises:
        InvalidArgumentError: If the text is not an integer or a ratio of integers
    """
    match = _FRACTION_TEXT.match(text)
    if match is None:
        raise InvalidArgumentError(f"Not an exact fraction: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise InvalidArgumentError(f"Zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, fraction text or Fraction to a Fraction; floats are refused."""
    if isinstance(value, bool):
        raise InvalidArgumentError("Booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    raise InvalidArgumentError(f"Expected an exact rational, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    """Render as "p" or "p/q" in lowest terms; zero is always "0"."""
    return str(Fraction(value))


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """
    Return the falling factorial (x)_n = x (x-1) ... (x-n+1).

    The empty product for n <= 0 is 1.
    """
    x = as_rational(x)
    result = Fraction(1)
    for k in range(n):
        result *= x - k
    return result
