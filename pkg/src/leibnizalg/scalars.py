"""Exact rational scalars: parsing, canonical formatting, square roots.

Scalars are stdlib ``fractions.Fraction`` values throughout the package;
file formats carry them as strings ``"p"`` or ``"p/q"`` with q > 0 and
gcd(|p|, q) = 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

__all__ = ["Q", "parse_rational", "format_rational", "rational_sqrt", "as_fraction"]

Q = Fraction

_RATIONAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/([1-9][0-9]*))?$")


class RationalFormatError(ValueError):
    """A rational literal is malformed or not in lowest terms."""


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational literal, rejecting non-lowest-terms input."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise RationalFormatError(f"malformed rational literal: {text!r}")
    if "/" in text:
        num_s, den_s = text.split("/")
        num, den = int(num_s), int(den_s)
        value = Fraction(num, den)
        if value.numerator != num or value.denominator != den:
            raise RationalFormatError(f"rational not in lowest terms: {text!r}")
        return value
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Canonical string form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        return None
    num_root = isqrt(value.numerator)
    den_root = isqrt(value.denominator)
    if num_root * num_root != value.numerator:
        return None
    if den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)


def as_fraction(value) -> Fraction:
    """Coerce ints / Fractions (and canonical strings) to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")
