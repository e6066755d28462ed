"""Nonincreasing vectors, prefix sums, and the majorization partial order.

Arithmetic is exact throughout: components are ints or ``fractions.Fraction``
values, never floats, so order tests carry no tolerance questions.  Vectors
must already be sorted nonincreasing; unsorted input is rejected rather than
silently sorted, because every constraint set handled downstream lives in the
cone x1 >= x2 >= ... >= xn and silent sorting would mask caller bugs.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence


class Relation(Enum):
    """Outcome of comparing two equal-length vectors under majorization."""

    EQUAL = "equal"
    LESS_OR_EQUAL = "less-or-equal"
    GREATER_OR_EQUAL = "greater-or-equal"
    INCOMPARABLE = "incomparable"


def check_vector(vec: Sequence) -> None:
    """Reject anything that is not a nonincreasing vector of nonnegatives."""
    if len(vec) == 0:
        raise ValueError("vector must have at least one component")
    previous = None
    for x in vec:
        if x < 0:
            raise ValueError(f"negative component {x!r}")
        if previous is not None and x > previous:
            raise ValueError("components not sorted nonincreasing")
        previous = x


def partial_sums(vec: Sequence) -> list:
    """Prefix sums of a validated nonincreasing vector; the last entry is the total."""
    check_vector(vec)
    sums = []
    acc = 0
    for x in vec:
        acc = acc + x
        sums.append(acc)
    return sums


def compare(left: Sequence, right: Sequence) -> Relation:
    """Compare two nonincreasing vectors in the majorization order.

    ``LESS_OR_EQUAL`` means every prefix sum of ``left`` is at most the
    corresponding prefix sum of ``right`` with equal totals.  Vectors with
    unequal component sums are incomparable by definition; a length mismatch
    is a caller error and raises.
    """
    if len(left) != len(right):
        raise ValueError(f"dimension mismatch: {len(left)} vs {len(right)}")
    left_sums = partial_sums(left)
    right_sums = partial_sums(right)
    if tuple(left) == tuple(right):
        return Relation.EQUAL
    if left_sums[-1] != right_sums[-1]:
        return Relation.INCOMPARABLE
    if all(a <= b for a, b in zip(left_sums, right_sums)):
        return Relation.LESS_OR_EQUAL
    if all(a >= b for a, b in zip(left_sums, right_sums)):
        return Relation.GREATER_OR_EQUAL
    return Relation.INCOMPARABLE


def is_majorized_by(left: Sequence, right: Sequence) -> bool:
    """True when ``left`` sits below ``right`` in the majorization order."""
    return compare(left, right) in (Relation.EQUAL, Relation.LESS_OR_EQUAL)
