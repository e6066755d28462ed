"""Unit and property tests for the majorization order."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from ccyclic.majorization import Relation, compare, is_majorized_by, partial_sums

from oracles import prefix_dominates, random_nonincreasing, transfer_down
from strategies import nonincreasing_fraction_vectors, nonincreasing_int_vectors

import random


class TestPartialSums:
    def test_simple(self):
        assert partial_sums((3, 2, 1)) == [3, 5, 6]

    def test_constant(self):
        assert partial_sums((2, 2, 2)) == [2, 4, 6]

    def test_longer(self):
        # re-checked by plain accumulation
        vec = (7, 3, 3, 3, 1, 1, 1, 1)
        expected = []
        acc = 0
        for x in vec:
            acc += x
            expected.append(acc)
        assert expected == [7, 10, 13, 16, 17, 18, 19, 20]
        assert partial_sums(vec) == expected

    def test_fractions(self):
        vec = (Fraction(8, 5),) * 5
        assert partial_sums(vec)[-1] == 8

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            partial_sums((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            partial_sums((2, -1))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            partial_sums(())


class TestCompare:
    def test_flat_below_spread(self):
        assert compare((2, 2, 2), (3, 2, 1)) is Relation.LESS_OR_EQUAL

    def test_incomparable_maximal_pair(self):
        left = (7, 4, 2, 2, 2, 1, 1, 1)
        right = (7, 3, 3, 3, 1, 1, 1, 1)
        assert compare(left, right) is Relation.INCOMPARABLE

    def test_pentacyclic_minimals(self):
        left = (3, 3, 3, 3, 3, 3, 3, 3, 2)
        right = (4, 4, 4, 3, 3, 2, 2, 2, 2)
        assert compare(left, right) is Relation.LESS_OR_EQUAL

    def test_equal(self):
        assert compare((3, 1), (3, 1)) is Relation.EQUAL

    def test_unequal_totals_incomparable(self):
        assert compare((3, 1), (3, 2)) is Relation.INCOMPARABLE

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            compare((2, 1), (2, 1, 0))

    def test_fraction_vs_int(self):
        assert compare((Fraction(8, 5),) * 5, (4, 1, 1, 1, 1)) is Relation.LESS_OR_EQUAL


@settings(max_examples=200)
@given(nonincreasing_int_vectors())
def test_reflexive(vec):
    assert compare(vec, vec) is Relation.EQUAL


@settings(max_examples=200)
@given(nonincreasing_fraction_vectors())
def test_reflexive_fractions(vec):
    assert compare(vec, vec) is Relation.EQUAL


@settings(max_examples=200)
@given(nonincreasing_int_vectors(min_size=2), nonincreasing_int_vectors(min_size=2))
def test_duality_and_sum_guard(left, right):
    if len(left) != len(right):
        left = left[: min(len(left), len(right))]
        right = right[: len(left)]
    rel = compare(left, right)
    back = compare(right, left)
    swapped = {
        Relation.EQUAL: Relation.EQUAL,
        Relation.LESS_OR_EQUAL: Relation.GREATER_OR_EQUAL,
        Relation.GREATER_OR_EQUAL: Relation.LESS_OR_EQUAL,
        Relation.INCOMPARABLE: Relation.INCOMPARABLE,
    }
    assert back is swapped[rel]
    if sum(left) != sum(right):
        assert rel is Relation.INCOMPARABLE
    if rel is Relation.EQUAL:
        assert left == right


@settings(max_examples=200)
@given(
    nonincreasing_int_vectors(min_size=2, low=1),
    nonincreasing_int_vectors(min_size=2, low=1),
)
def test_agreement_with_plain_prefix_oracle(left, right):
    if len(left) != len(right):
        return
    rel = compare(left, right)
    below = prefix_dominates(right, left)
    above = prefix_dominates(left, right)
    assert below == (rel in (Relation.LESS_OR_EQUAL, Relation.EQUAL))
    assert above == (rel in (Relation.GREATER_OR_EQUAL, Relation.EQUAL))


def test_transitivity_on_transfer_chains():
    rng = random.Random(42)
    for _ in range(500):
        top = random_nonincreasing(rng, rng.randint(2, 9))
        mid = transfer_down(rng, top)
        low = transfer_down(rng, mid)
        assert is_majorized_by(mid, top)
        assert is_majorized_by(low, mid)
        assert is_majorized_by(low, top)
