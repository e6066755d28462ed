"""Majorization-extremal degree sequences of c-cyclic graphs and index bounds."""

from .bounds import (
    BoundsReport,
    OracleOutcome,
    bounds,
    bounds_table,
    closed_form_inverse_degree,
    refined_inverse_degree_upper,
    verify_bounds,
)
from .degree_sequences import (
    CoverageReport,
    CyclomaticClass,
    EnumerationCapError,
    ExtremalFamily,
    PatternCheck,
    PatternFamily,
    check_family_extremality,
    check_pattern_extremality,
    enumerate_sequences,
    extremal_family,
    graphical_class_sequences,
    is_ccyclic_sequence,
    is_ccyclic_sequence_via_inequalities,
    is_graphical,
    min_order,
    parametric_extremal_family,
)
from .extremal import (
    BoxSet,
    InfeasibleSetError,
    TwoBlockSet,
    UnsupportedCaseError,
    integerize_minimal,
    maximal_box,
    maximal_two_block,
    minimal_box,
    minimal_two_block,
)
from .indices import IndexSpec, IndexValue, SchurClass, evaluate, schur_class
from .majorization import Relation, compare, is_majorized_by, partial_sums
from .realization import (
    RealizationError,
    SimpleGraph,
    cyclomatic_number,
    export_dot,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BoxSet",
    "CoverageReport",
    "CyclomaticClass",
    "EnumerationCapError",
    "ExtremalFamily",
    "IndexSpec",
    "IndexValue",
    "InfeasibleSetError",
    "OracleOutcome",
    "PatternCheck",
    "PatternFamily",
    "RealizationError",
    "Relation",
    "SchurClass",
    "SimpleGraph",
    "TwoBlockSet",
    "UnsupportedCaseError",
    "bounds",
    "bounds_table",
    "check_family_extremality",
    "check_pattern_extremality",
    "closed_form_inverse_degree",
    "compare",
    "cyclomatic_number",
    "enumerate_sequences",
    "evaluate",
    "export_dot",
    "extremal_family",
    "graphical_class_sequences",
    "integerize_minimal",
    "is_ccyclic_sequence",
    "is_ccyclic_sequence_via_inequalities",
    "is_graphical",
    "is_majorized_by",
    "maximal_box",
    "maximal_two_block",
    "min_order",
    "minimal_box",
    "minimal_two_block",
    "parametric_extremal_family",
    "partial_sums",
    "realize",
    "refined_inverse_degree_upper",
    "schur_class",
    "verify_bounds",
]
