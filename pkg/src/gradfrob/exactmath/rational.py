"""Rational scalars: ``fractions.Fraction`` plus the "p/q" string format."""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def parse_rational(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; ints and Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    m = _RATIONAL_RE.fullmatch(text)
    if not m:
        raise ParseError(f"not a rational: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(x) -> str:
    return str(Fraction(x))
