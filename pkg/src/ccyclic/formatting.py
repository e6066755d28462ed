"""Deterministic rendering helpers shared by reports and the CLI."""

from __future__ import annotations

from fractions import Fraction
from itertools import groupby

from .indices import IndexValue


def format_fraction(value) -> str:
    """Exact rational as ``p/q`` (or plain ``p`` for integers)."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def format_decimal(value) -> str:
    """Decimal rendering with 12 significant digits."""
    return f"{float(value):.12g}"


def format_index_value(value: IndexValue) -> str:
    if value.exact:
        return f"{format_fraction(value.value)} ({format_decimal(value.value)})"
    return format_decimal(value.value)


def format_sequence(seq) -> str:
    """Run-length rendering, e.g. (7, 4, 2, 2, 2, 1, 1, 1) -> ``[7, 4, 2^3, 1^3]``."""
    parts = []
    for value, run in groupby(seq):
        count = len(list(run))
        parts.append(f"{value}^{count}" if count > 1 else f"{value}")
    return "[" + ", ".join(parts) + "]"


def plain_sequence(seq) -> str:
    """Space-separated rendering used inside CSV fields."""
    return " ".join(str(d) for d in seq)
