"""Degree sequences of connected graphs with a prescribed number of independent cycles.

A connected simple graph on ``n`` vertices with ``m`` edges has cyclomatic
number ``c = m - n + 1``: trees have c=0, unicyclic graphs c=1, and so on.
For ``0 <= c <= 6`` the degree sequences of such graphs are characterized by
a fixed family of counting conditions ("at least j entries are >= t"); each
condition doubles as a box of the form handled by :mod:`ccyclic.extremal`,
which yields the majorization-maximal and -minimal degree sequences of the
whole class.

Two independent characterizations are implemented side by side: the counting
form used throughout this package, and the classic test via edge count plus
prefix-sum inequalities.  They are proved equivalent in the literature; the
test suite re-checks the equivalence exhaustively at small orders, and both
are cross-validated against plain graphicality, since for any c >= 0 a
positive sequence with sum ``2(n + c - 1)`` belongs to the class exactly when
it is graphical (a graphical sequence with minimum degree >= 1 and at least
``n - 1`` edges always has a connected realization).

Index-notation caveat: two of the published block descriptions carry
overlapping subscripts for where the "degree >= 2" block ends; the counting
form is authoritative here (first seven entries >= 2 for the widest c=5 set,
first eight for the widest c=6 set).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .extremal import BoxSet, integerize_minimal, maximal_box, minimal_box
from .majorization import Relation, compare, is_majorized_by

DEFAULT_ENUMERATION_CAP = 12

#: counting conditions per cyclomatic number: (min order, ((threshold, count), ...))
#: meaning "defined for n >= min order; at least `count` degrees are >= `threshold`".
_COUNT_CONDITIONS = {
    0: ((2, ()),),
    1: ((3, ((2, 3),)),),
    2: ((4, ((2, 4),)),),
    3: (
        (5, ((2, 5),)),
        (4, ((3, 4),)),
    ),
    4: (
        (6, ((2, 6),)),
        (5, ((3, 4), (2, 5))),
    ),
    5: (
        (7, ((2, 7),)),
        (6, ((3, 4), (2, 6))),
        (5, ((4, 3), (3, 5))),
    ),
    6: (
        (8, ((2, 8),)),
        (7, ((3, 4), (2, 7))),
        (6, ((4, 3), (3, 5), (2, 6))),
        (6, ((3, 6),)),
        (5, ((4, 5),)),
    ),
}

MAX_SUPPORTED_CYCLES = max(_COUNT_CONDITIONS)


class EnumerationCapError(RuntimeError):
    """Requested order exceeds the configured exhaustive-enumeration cap."""


def min_order(c: int) -> int:
    """Smallest vertex count admitting a connected graph with c independent cycles."""
    if c < 0:
        raise ValueError("cyclomatic number must be nonnegative")
    n = 2
    while (n - 1) * (n - 2) // 2 < c:
        n += 1
    return n


@dataclass(frozen=True)
class CyclomaticClass:
    """Connected simple graphs on ``n`` vertices with ``c`` independent cycles."""

    c: int
    n: int

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("cyclomatic number must be nonnegative")
        if self.n < min_order(self.c):
            raise ValueError(
                f"no connected graph with {self.c} independent cycles has "
                f"order {self.n} (need n >= {min_order(self.c)})"
            )

    @property
    def edge_count(self) -> int:
        return self.n + self.c - 1

    @property
    def degree_total(self) -> int:
        return 2 * (self.n + self.c - 1)


def validate_degree_sequence(seq, n: int) -> tuple:
    """Check a degree sequence: length n, nonincreasing, entries in [1, n-1]."""
    seq = tuple(int(d) for d in seq)
    if len(seq) != n:
        raise ValueError(f"expected {n} degrees, got {len(seq)}")
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise ValueError("degrees not sorted nonincreasing")
    if seq[-1] < 1 or seq[0] > n - 1:
        raise ValueError("degrees must lie in [1, n-1]")
    return seq


def _count_at_least(seq, threshold: int) -> int:
    return sum(1 for d in seq if d >= threshold)


def is_ccyclic_sequence(seq, klass: CyclomaticClass) -> bool:
    """Counting-form membership test for the degree sequences of the class."""
    seq = validate_degree_sequence(seq, klass.n)
    if klass.c > MAX_SUPPORTED_CYCLES:
        raise ValueError(
            f"no characterization implemented beyond c={MAX_SUPPORTED_CYCLES}"
        )
    if sum(seq) != klass.degree_total:
        return False
    for needed_order, needs in _COUNT_CONDITIONS[klass.c]:
        if klass.n < needed_order:
            continue
        if all(_count_at_least(seq, t) >= j for t, j in needs):
            return True
    return False


def is_ccyclic_sequence_via_inequalities(seq, klass: CyclomaticClass) -> bool:
    """Classic membership test: edge count plus prefix-sum inequalities.

    Kept textually independent from the counting form so the two can guard
    each other; missing entries count as zero in the longer inequalities.
    """
    seq = validate_degree_sequence(seq, klass.n)
    n, c = klass.n, klass.c
    total = sum(seq)
    if total % 2:
        return False
    m = total // 2
    if m != n + c - 1:
        return False

    def d(i: int) -> int:
        return seq[i - 1] if i <= n else 0

    if c == 0:
        return m >= 1
    if c == 1:
        return m >= 3 and d(1) + d(2) <= n + 1
    if c == 2:
        return m >= 5 and d(1) + d(2) <= n + 2 and d(1) + d(2) + d(3) <= n + 4
    if c == 3:
        return m >= 6 and d(1) + d(2) <= n + 3 and d(1) + d(2) + d(3) <= n + 5
    if c == 4:
        return (
            m >= 8
            and d(1) + d(2) <= n + 4
            and d(1) + d(2) + d(3) <= n + 6
            and d(1) + d(2) + d(3) + d(4) <= n + 9
        )
    if c == 5:
        return (
            m >= 9
            and d(1) + d(2) <= n + 5
            and d(1) + d(2) + d(3) <= n + 7
            and d(1) + d(2) + d(3) + d(4) <= n + 10
            and 2 * d(1) + 2 * d(2) + d(3) + d(4) + d(5) <= 2 * n + 16
        )
    if c == 6:
        return (
            m >= 10
            and d(1) + d(2) <= n + 6
            and d(1) + d(2) + d(3) <= n + 8
            and d(1) + d(2) + d(3) + d(4) <= n + 11
            and 2 * d(1) + 2 * d(2) + d(3) + d(4) + d(5) <= 2 * n + 18
            and 2 * d(1) + 2 * d(2) + d(3) + d(4) + d(5) + d(6) <= 2 * n + 20
        )
    raise ValueError(f"no inequality characterization implemented for c={c}")


def is_graphical(seq) -> bool:
    """Erdos-Gallai test: is the sequence realizable by a simple graph?"""
    degrees = sorted((int(d) for d in seq), reverse=True)
    n = len(degrees)
    if n == 0 or degrees[-1] < 0 or degrees[0] > n - 1:
        return False
    if sum(degrees) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += degrees[k - 1]
        slack = k * (k - 1) + sum(min(d, k) for d in degrees[k:])
        if prefix > slack:
            return False
    return True


def candidate_sequences(n: int, total: int) -> Iterator[tuple]:
    """All nonincreasing positive length-n sequences with max <= n-1 and the given sum.

    Yielded in descending lexicographic order; the recursion prunes on the
    amount of sum the remaining slots can still absorb.
    """

    def rec(slots: int, remaining: int, bound: int) -> Iterator[tuple]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        high = min(bound, remaining - (slots - 1))
        low = -(-remaining // slots)  # ceil: parts below this cannot stay nonincreasing
        for part in range(high, max(low, 1) - 1, -1):
            for rest in rec(slots - 1, remaining - part, part):
                yield (part,) + rest

    if n < 1:
        return
    yield from rec(n, total, n - 1)


def enumerate_sequences(
    klass: CyclomaticClass, cap: int = DEFAULT_ENUMERATION_CAP
) -> list:
    """Every degree sequence of the class, in descending lexicographic order."""
    if klass.n > cap:
        raise EnumerationCapError(f"order {klass.n} exceeds enumeration cap {cap}")
    return [
        seq
        for seq in candidate_sequences(klass.n, klass.degree_total)
        if is_ccyclic_sequence(seq, klass)
    ]


def graphical_class_sequences(
    klass: CyclomaticClass, cap: int = DEFAULT_ENUMERATION_CAP
) -> list:
    """Degree sequences of the class for arbitrary c >= 0, via graphicality.

    A positive sequence with sum ``2(n + c - 1)`` is the degree sequence of a
    connected graph with c independent cycles iff it is graphical, so this
    enumeration needs no per-c characterization.  For c <= 6 it agrees with
    :func:`enumerate_sequences`.
    """
    if klass.n > cap:
        raise EnumerationCapError(f"order {klass.n} exceeds enumeration cap {cap}")
    return [
        seq
        for seq in candidate_sequences(klass.n, klass.degree_total)
        if is_graphical(seq)
    ]


# ---------------------------------------------------------------------------
# Extremal families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalFamily:
    """Maximal degree sequences (pairwise incomparable) and the unique minimal one."""

    klass: CyclomaticClass
    maximals: tuple
    minimal: tuple


def class_boxes(klass: CyclomaticClass) -> list:
    """The constraint boxes live at this order, one per counting condition."""
    if klass.c > MAX_SUPPORTED_CYCLES:
        raise ValueError(
            f"extremal families are only established up to c={MAX_SUPPORTED_CYCLES}"
        )
    n = klass.n
    boxes = []
    for needed_order, needs in _COUNT_CONDITIONS[klass.c]:
        if n < needed_order:
            continue
        lower = [1] * n
        for threshold, count in needs:
            for i in range(count):
                lower[i] = max(lower[i], threshold)
        boxes.append(
            BoxSet(total=klass.degree_total, lower=tuple(lower), upper=(n - 1,) * n)
        )
    return boxes


def _as_int_tuple(vec) -> tuple:
    out = []
    for x in vec:
        if getattr(x, "denominator", 1) != 1:
            raise AssertionError(f"expected integer components, got {vec}")
        out.append(int(x))
    return tuple(out)


def _discard_dominated(seqs: list) -> list:
    """Drop sequences majorized by another distinct candidate."""
    unique = sorted(set(seqs), reverse=True)
    kept = []
    for seq in unique:
        dominated = any(
            other != seq and is_majorized_by(seq, other) for other in unique
        )
        if not dominated:
            kept.append(seq)
    return kept


def extremal_family(klass: CyclomaticClass) -> ExtremalFamily:
    """Majorization-extremal degree sequences of the class.

    Each live constraint box contributes one maximal and one integer minimal
    element; maximal candidates dominated by another are discarded, and the
    minimal candidates are totally ordered with the least one minorizing the
    whole class.  The survivors are checked to be class members and pairwise
    incomparable before they are returned.
    """
    boxes = class_boxes(klass)
    max_candidates = []
    min_candidates = []
    for box in boxes:
        max_candidates.append(_as_int_tuple(maximal_box(box)))
        min_candidates.append(integerize_minimal(minimal_box(box), box))
    maximals = _discard_dominated(max_candidates)

    least = min_candidates[0]
    for cand in min_candidates[1:]:
        rel = compare(cand, least)
        if rel is Relation.LESS_OR_EQUAL:
            least = cand
        elif rel is Relation.INCOMPARABLE:
            raise AssertionError(
                f"incomparable minimal candidates {cand} and {least} for {klass}"
            )
    for cand in min_candidates:
        if not is_majorized_by(least, cand):
            raise AssertionError(f"{least} fails to minorize candidate {cand}")

    for seq in list(maximals) + [least]:
        if not is_ccyclic_sequence(seq, klass):
            raise AssertionError(f"extremal sequence {seq} is not in the class")
    for i, a in enumerate(maximals):
        if not is_majorized_by(least, a):
            raise AssertionError(f"minimal {least} not below maximal {a}")
        for b in maximals[i + 1 :]:
            if compare(a, b) is not Relation.INCOMPARABLE:
                raise AssertionError(f"maximal candidates {a} and {b} are comparable")
    return ExtremalFamily(klass=klass, maximals=tuple(maximals), minimal=least)


# ---------------------------------------------------------------------------
# Closed-form c-parameterized patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PatternFamily:
    """Extremal candidates written directly in terms of the cyclomatic number.

    Proven extremal for c <= 6; offered for larger c as a conjecture to be
    checked against enumeration.  A pattern whose exponents turn negative or
    whose entries leave [1, n-1] at the given order is omitted, and the
    minimal pattern additionally needs c >= 1 and 2c - 2 <= n.
    """

    c: int
    n: int
    maximals: tuple
    minimal: Optional[tuple]


def _valid_pattern(seq: tuple, n: int, degree_total: int) -> bool:
    if len(seq) != n or sum(seq) != degree_total:
        return False
    if any(a < b for a, b in zip(seq, seq[1:])):
        return False
    return 1 <= seq[-1] and seq[0] <= n - 1


def parametric_extremal_family(c: int, n: int) -> PatternFamily:
    """Instantiate the closed-form extremal patterns at (c, n)."""
    if c < 0:
        raise ValueError("cyclomatic number must be nonnegative")
    if n < min_order(c):
        raise ValueError(f"order {n} below the minimum {min_order(c)} for c={c}")
    degree_total = 2 * (n + c - 1)
    maximals = []

    def push(*parts):
        seq = tuple(d for d in parts if d > 0)
        if _valid_pattern(seq, n, degree_total):
            maximals.append(seq)

    if n - c - 2 >= 0:
        push(n - 1, c + 1, *([2] * c), *([1] * (n - c - 2)))
    if c >= 3 and n - c - 1 >= 0:
        push(n - 1, c, 3, 3, *([2] * (c - 3)), *([1] * (n - c - 1)))
    if c >= 5 and n - c >= 0:
        push(n - 1, c - 1, 4, 3, 3, *([2] * (c - 5)), *([1] * (n - c)))

    minimal = None
    if c >= 1 and 2 * c - 2 <= n:
        seq = (3,) * (2 * c - 2) + (2,) * (n - 2 * c + 2)
        if _valid_pattern(seq, n, degree_total):
            minimal = seq
    return PatternFamily(c=c, n=n, maximals=tuple(maximals), minimal=minimal)


# ---------------------------------------------------------------------------
# Coverage checks against exhaustive enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverageReport:
    """Result of checking extremal candidates against an enumerated class."""

    c: int
    n: int
    sequence_count: int
    members_valid: bool
    pairwise_incomparable: bool
    not_below_any_maximal: tuple
    not_above_minimal: tuple

    @property
    def ok(self) -> bool:
        return (
            self.members_valid
            and self.pairwise_incomparable
            and not self.not_below_any_maximal
            and not self.not_above_minimal
        )


def _coverage(c, n, maximals, minimal, population) -> CoverageReport:
    pop = set(population)
    members_valid = all(seq in pop for seq in maximals) and (
        minimal is None or minimal in pop
    )
    incomparable = all(
        compare(a, b) is Relation.INCOMPARABLE
        for i, a in enumerate(maximals)
        for b in maximals[i + 1 :]
    )
    uncovered = tuple(
        seq
        for seq in population
        if not any(is_majorized_by(seq, top) for top in maximals)
    )
    below = (
        tuple(seq for seq in population if not is_majorized_by(minimal, seq))
        if minimal is not None
        else ()
    )
    return CoverageReport(
        c=c,
        n=n,
        sequence_count=len(population),
        members_valid=members_valid,
        pairwise_incomparable=incomparable,
        not_below_any_maximal=uncovered,
        not_above_minimal=below,
    )


def check_family_extremality(
    klass: CyclomaticClass, cap: int = DEFAULT_ENUMERATION_CAP
) -> CoverageReport:
    """Verify the extremal family against the full enumeration of its class."""
    family = extremal_family(klass)
    population = enumerate_sequences(klass, cap)
    return _coverage(klass.c, klass.n, family.maximals, family.minimal, population)


@dataclass(frozen=True)
class PatternCheck:
    """Whether the closed-form patterns stay extremal within an enumerated class.

    The maximal patterns need not cover the whole class (already for c = 6 a
    fourth maximal exists beyond the three closed forms); what is checked is
    that they are genuine extremal elements: no enumerated sequence strictly
    majorizes any maximal pattern, and the minimal pattern, when defined,
    minorizes every enumerated sequence.
    """

    c: int
    n: int
    sequence_count: int
    members_valid: bool
    pairwise_incomparable: bool
    dominated_patterns: tuple  # (pattern, strictly majorizing witness) pairs
    not_above_minimal: tuple

    @property
    def ok(self) -> bool:
        return (
            self.members_valid
            and self.pairwise_incomparable
            and not self.dominated_patterns
            and not self.not_above_minimal
        )


def check_pattern_extremality(
    c: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> PatternCheck:
    """Check the closed-form patterns against graphical enumeration (any c >= 0)."""
    patterns = parametric_extremal_family(c, n)
    population = graphical_class_sequences(CyclomaticClass(c=c, n=n), cap)
    pop = set(population)
    members_valid = all(seq in pop for seq in patterns.maximals) and (
        patterns.minimal is None or patterns.minimal in pop
    )
    incomparable = all(
        compare(a, b) is Relation.INCOMPARABLE
        for i, a in enumerate(patterns.maximals)
        for b in patterns.maximals[i + 1 :]
    )
    dominated = []
    for pattern in patterns.maximals:
        for seq in population:
            if seq != pattern and is_majorized_by(pattern, seq):
                dominated.append((pattern, seq))
                break
    below = (
        tuple(
            seq
            for seq in population
            if not is_majorized_by(patterns.minimal, seq)
        )
        if patterns.minimal is not None
        else ()
    )
    return PatternCheck(
        c=c,
        n=n,
        sequence_count=len(population),
        members_valid=members_valid,
        pairwise_incomparable=incomparable,
        dominated_patterns=tuple(dominated),
        not_above_minimal=below,
    )
