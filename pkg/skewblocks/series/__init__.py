"""
Exact truncated power series, rational power series, and the probes that
decide whether F = 1/(1 - G) is a supercritical relation.
"""

from .truncated import (
    Domination,
    TruncatedSeries,
    coefficient_dominates,
    eval_partial,
    indecomposable_part,
    multiply,
    parse_coefficients,
    parse_kind,
    power,
    quasi_inverse,
    reciprocal,
    series_from_counts,
)
from .rational import RationalFunction
from .supercritical import (
    SupercriticalVerdict,
    VerdictStatus,
    rational_supercritical,
    sequence_bound_violations,
    square_exceeds,
    truncated_supercritical,
)

__all__ = [
    "Domination",
    "TruncatedSeries",
    "coefficient_dominates",
    "eval_partial",
    "indecomposable_part",
    "multiply",
    "parse_coefficients",
    "parse_kind",
    "power",
    "quasi_inverse",
    "reciprocal",
    "series_from_counts",
    "RationalFunction",
    "SupercriticalVerdict",
    "VerdictStatus",
    "rational_supercritical",
    "sequence_bound_violations",
    "square_exceeds",
    "truncated_supercritical",
]
