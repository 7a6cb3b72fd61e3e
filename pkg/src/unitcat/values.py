"""Exact values in the unit interval.

Every quantity the library computes with is a ``fractions.Fraction``
confined to [0, 1]; floats are never accepted.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class RationalFormatError(ValueError):
    """A rational literal could not be parsed (e.g. "3/0", "x/2")."""

    code = "bad-rational"


class UnitRangeError(ValueError):
    """A rational value lies outside [0, 1]."""

    code = "value-out-of-range"


def as_value(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction in [0, 1]."""
    if isinstance(x, bool) or isinstance(x, float):
        raise RationalFormatError(f"exact rational required, got {x!r}")
    if isinstance(x, str):
        return parse_value(x)
    if isinstance(x, int):
        x = Fraction(x)
    if not isinstance(x, Fraction):
        raise RationalFormatError(f"exact rational required, got {x!r}")
    if x < 0 or x > 1:
        raise UnitRangeError(f"value {x} outside [0,1]")
    return x


def parse_value(text: str) -> Fraction:
    """Parse a "p/q" (or bare integer) literal into a unit-interval Fraction."""
    body = text.strip()
    try:
        if "/" in body:
            num, _, den = body.partition("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(body))
    except (ValueError, ZeroDivisionError) as exc:
        raise RationalFormatError(f"malformed rational {text!r}") from exc
    if value < 0 or value > 1:
        raise UnitRangeError(f"value {text!r} outside [0,1]")
    return value


def format_value(v: Fraction) -> str:
    """Render a value as "p/q" ("0" and "1" stay bare)."""
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"
