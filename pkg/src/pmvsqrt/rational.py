"""Exact rational scalars.

Backed by :class:`fractions.Fraction`, which already keeps values in lowest
terms with a positive denominator.  This module only adds the strict textual
format used by spec files: integers, or strings ``"p/q"`` / ``"p"``.  Floats
are never accepted.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class RationalFormatError(ValueError):
    pass


def parse_rational(value) -> Fraction:
    """Parse an int, a Fraction or a ``"p/q"`` string into a Fraction."""
    if isinstance(value, bool):
        raise RationalFormatError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RAT_RE.match(value)
        if not m:
            raise RationalFormatError(f"malformed rational {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise RationalFormatError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise RationalFormatError(f"not a rational: {value!r}")


def format_rational(q) -> int | str:
    """JSON-ready literal: a plain int when integral, else ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"


def show_rational(q) -> str:
    return str(format_rational(q))
