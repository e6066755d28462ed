"""Degree-based topological indices and their Schur classification.

Supported indices are the ones determined by the degree sequence alone:

* general first Zagreb, ``sum(d_i ** alpha)`` for rational alpha not in {0, 1};
* inverse degree, ``sum(1 / d_i)`` (the alpha = -1 special case);
* first multiplicative Zagreb in logarithmic form, ``2 * sum(ln d_i)``.

Power sums with convex ``d ** alpha`` (alpha < 0 or alpha > 1) are
Schur-convex on positive vectors, those with 0 < alpha < 1 Schur-concave,
and the log form is Schur-concave.  Integer exponents are evaluated in exact
rational arithmetic; everything else is binary floating point with an
absolute comparison tolerance of 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

FLOAT_TOLERANCE = 1e-12

GENERAL_ZAGREB = "general-zagreb"
INVERSE_DEGREE = "inverse-degree"
MULT_ZAGREB_LOG = "mult-zagreb-log"

_KINDS = (GENERAL_ZAGREB, INVERSE_DEGREE, MULT_ZAGREB_LOG)


class SchurClass(Enum):
    CONVEX = "convex"
    CONCAVE = "concave"


@dataclass(frozen=True)
class IndexSpec:
    """A degree-based index together with its exponent, when it has one."""

    kind: str
    alpha: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown index kind {self.kind!r}")
        if self.kind == GENERAL_ZAGREB:
            if self.alpha is None:
                raise ValueError("general-zagreb needs an exponent")
            object.__setattr__(self, "alpha", Fraction(self.alpha))
            if self.alpha in (0, 1):
                raise ValueError("exponents 0 and 1 are excluded by definition")
        elif self.alpha is not None:
            raise ValueError(f"{self.kind} takes no exponent")

    @classmethod
    def general_zagreb(cls, alpha) -> "IndexSpec":
        return cls(kind=GENERAL_ZAGREB, alpha=Fraction(alpha))

    @classmethod
    def inverse_degree(cls) -> "IndexSpec":
        return cls(kind=INVERSE_DEGREE)

    @classmethod
    def mult_zagreb_log(cls) -> "IndexSpec":
        return cls(kind=MULT_ZAGREB_LOG)

    @property
    def schur_class(self) -> SchurClass:
        if self.kind == GENERAL_ZAGREB:
            return SchurClass.CONCAVE if 0 < self.alpha < 1 else SchurClass.CONVEX
        if self.kind == INVERSE_DEGREE:
            return SchurClass.CONVEX
        return SchurClass.CONCAVE

    @property
    def exact(self) -> bool:
        """Whether evaluation stays in exact rational arithmetic."""
        if self.kind == INVERSE_DEGREE:
            return True
        if self.kind == GENERAL_ZAGREB:
            return self.alpha.denominator == 1
        return False

    @property
    def label(self) -> str:
        if self.kind == GENERAL_ZAGREB:
            return f"{GENERAL_ZAGREB}(alpha={self.alpha})"
        return self.kind


@dataclass(frozen=True)
class IndexValue:
    """An index evaluation; exact values are Fractions, the rest floats."""

    value: Union[Fraction, float]
    exact: bool

    def as_float(self) -> float:
        return float(self.value)

    def matches(self, other: "IndexValue") -> bool:
        """Equality, exact where possible and within 1e-12 otherwise."""
        if self.exact and other.exact:
            return self.value == other.value
        return abs(self.as_float() - other.as_float()) <= FLOAT_TOLERANCE


def evaluate(index: IndexSpec, seq) -> IndexValue:
    """Evaluate the index on a degree sequence (all entries must be >= 1)."""
    degrees = [int(d) for d in seq]
    if not degrees or min(degrees) < 1:
        raise ValueError("index evaluation needs positive degrees")
    if index.kind == INVERSE_DEGREE:
        return IndexValue(sum(Fraction(1, d) for d in degrees), exact=True)
    if index.kind == MULT_ZAGREB_LOG:
        return IndexValue(2.0 * sum(math.log(d) for d in degrees), exact=False)
    if index.alpha.denominator == 1:
        power = int(index.alpha)
        return IndexValue(sum(Fraction(d) ** power for d in degrees), exact=True)
    exponent = float(index.alpha)
    return IndexValue(sum(d**exponent for d in degrees), exact=False)


def schur_class(index: IndexSpec) -> SchurClass:
    """Schur classification of the index (convexity along the majorization order)."""
    return index.schur_class
