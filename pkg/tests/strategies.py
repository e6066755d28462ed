"""Hypothesis strategies for vectors, boxes, and degree sequences."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from ccyclic.extremal import BoxSet, TwoBlockSet


@st.composite
def nonincreasing_int_vectors(draw, min_size=1, max_size=8, low=0, high=12):
    values = draw(
        st.lists(st.integers(low, high), min_size=min_size, max_size=max_size)
    )
    return tuple(sorted(values, reverse=True))


@st.composite
def nonincreasing_fraction_vectors(draw, min_size=1, max_size=6):
    values = draw(
        st.lists(
            st.fractions(min_value=0, max_value=10, max_denominator=4),
            min_size=min_size,
            max_size=max_size,
        )
    )
    return tuple(sorted(values, reverse=True))


@st.composite
def integer_boxes(draw, max_size=7, high=10):
    """A feasible BoxSet with integer bounds and an integer total."""
    n = draw(st.integers(1, max_size))
    upper = sorted(
        (draw(st.integers(0, high)) for _ in range(n)), reverse=True
    )
    lower = []
    previous = None
    for i in range(n):
        cap = upper[i] if previous is None else min(upper[i], previous)
        lower.append(draw(st.integers(0, cap)))
        previous = lower[-1]
    total = draw(st.integers(sum(lower), sum(upper)))
    return BoxSet(total=total, lower=tuple(lower), upper=tuple(upper))


@st.composite
def two_block_sets(draw, max_size=8, high=9, overlap_only=False):
    """A feasible TwoBlockSet with integer data."""
    n = draw(st.integers(2, max_size))
    h = draw(st.integers(1, n))
    m2 = draw(st.integers(0, high - 1))
    m1 = draw(st.integers(m2, high - 1))
    M1 = draw(st.integers(m1 + 1, high))
    if overlap_only:
        M2 = draw(st.integers(max(m2 + 1, m1), M1))
    else:
        M2 = draw(st.integers(m2 + 1, M1))
    low = h * m1 + (n - h) * m2
    high_total = h * M1 + (n - h) * M2
    total = draw(st.integers(low, high_total))
    return TwoBlockSet(n=n, h=h, total=total, m1=m1, M1=M1, m2=m2, M2=M2)


@st.composite
def degree_sequences(draw, min_size=2, max_size=9):
    """A positive nonincreasing sequence with max entry below its length."""
    n = draw(st.integers(min_size, max_size))
    values = draw(
        st.lists(st.integers(1, n - 1), min_size=n, max_size=n)
    )
    return tuple(sorted(values, reverse=True))
