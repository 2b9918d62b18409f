"""Exact rational parsing and formatting for the JSON surfaces.

Profits travel as integers or "num/den" strings; floats are rejected
because they cannot round-trip exactly.  Output is always "num/den".
"""

from fractions import Fraction


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_rational(entry: object) -> Fraction:
    if isinstance(entry, bool):
        raise ValueError(f"not a rational number: {entry!r}")
    if isinstance(entry, int):
        return Fraction(entry)
    if isinstance(entry, str):
        try:
            return Fraction(entry)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {entry!r}") from exc
    raise ValueError(
        f"not a rational number: {entry!r} (use an integer or a 'num/den' string)"
    )
