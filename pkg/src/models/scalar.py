import re
from fractions import Fraction
from typing import Union

from src.exceptions import ParseError, ScalarTooLarge

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"<num>/<den>"`` or an integer literal into an exact rational.

    :param text: Rational in text form
    :returns: Reduced fraction
    :raises ParseError: On floats, zero denominators or anything else
    """
    if not isinstance(text, str):
        raise ParseError(f"Rational must be given as text, got {type(text).__name__}")
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise ParseError(f"Malformed rational: {text!r}")
    try:
        numerator, denominator = (int(group) if group is not None else 1 for group in match.groups())
    except ValueError as e:
        raise ParseError(f"Rational has too many digits ({len(text)} characters)") from e
    if denominator == 0:
        raise ParseError(f"Zero denominator in rational: {text!r}")
    return Fraction(numerator, denominator)


def format_scalar(value: Scalar) -> str:
    """Format a rational as ``"<num>/<den>"`` with an explicit denominator.

    :raises ScalarTooLarge: If a part exceeds the interpreter's integer-to-text digit limit
    """
    value = Fraction(value)
    try:
        return f"{value.numerator}/{value.denominator}"
    except ValueError as e:
        bits = max(value.numerator.bit_length(), value.denominator.bit_length())
        raise ScalarTooLarge(f"Rational with a {bits}-bit part cannot be written as text") from e


def as_scalar(value: ScalarLike) -> Scalar:
    """Coerce ints, fractions and text forms to a rational."""
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")
