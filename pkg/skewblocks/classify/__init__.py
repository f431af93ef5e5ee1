"""
Which patterns the monotone block-count theorem covers, empirical Wilf
classes, and the monotonicity checker.
"""

from .models import (
    ApplicabilityReport,
    BlockCellMismatch,
    Condition,
    MonotonicityViolation,
    WilfClass,
    WilfClassification,
)
from .monotonicity import block_table_mismatches, check_monotonicity, table_violations
from .applicability import (
    KnownEquivalenceTable,
    applicability_for_length,
    good_symmetric_form,
    skew_indecomposable_form,
    syntactic_condition,
    theorem_applicability,
)
from .wilf import wilf_classes

__all__ = [
    "ApplicabilityReport",
    "BlockCellMismatch",
    "Condition",
    "MonotonicityViolation",
    "WilfClass",
    "WilfClassification",
    "block_table_mismatches",
    "check_monotonicity",
    "table_violations",
    "KnownEquivalenceTable",
    "applicability_for_length",
    "good_symmetric_form",
    "skew_indecomposable_form",
    "syntactic_condition",
    "theorem_applicability",
    "wilf_classes",
]
