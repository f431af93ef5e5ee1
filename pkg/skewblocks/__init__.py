"""
skewblocks - pattern avoiders counted by skew blocks

Exact enumeration of permutations avoiding a set of patterns, stratified by
their number of skew blocks, with the tools to check the claims made about
those tables:

- Pruned, parallel, deterministic enumeration (Av_n and Av_{n,l})
- Exact truncated power series and rational-function supercriticality probes
- Exhaustive harnesses for the maps between two-block and one-block avoiders
- Theorem coverage, empirical Wilf classes and monotonicity checks

Example:
    ```python
    from skewblocks import count_by_blocks, series_from_counts, quasi_inverse

    table = count_by_blocks(8, ["132"])
    table.row(4)                      # [5, 5, 3, 1, 0, 0, 0, 0]

    one_block = series_from_counts(table, "blocks", 1)
    quasi_inverse(one_block)          # the total series of 132
    ```
"""

__version__ = "0.1.0"

from .perm import Permutation, parse_permutation, skew_decompose, is_good
from .enumeration import CountTable, PatternSet, count_avoiders, count_by_blocks, enumerate_avoiders
from .series import (
    RationalFunction,
    TruncatedSeries,
    indecomposable_part,
    quasi_inverse,
    rational_supercritical,
    series_from_counts,
)
from .maps import verify_lemma_132, verify_lemma_good
from .classify import check_monotonicity, theorem_applicability, wilf_classes

__all__ = [
    "Permutation",
    "parse_permutation",
    "skew_decompose",
    "is_good",
    "CountTable",
    "PatternSet",
    "count_avoiders",
    "count_by_blocks",
    "enumerate_avoiders",
    "RationalFunction",
    "TruncatedSeries",
    "indecomposable_part",
    "quasi_inverse",
    "rational_supercritical",
    "series_from_counts",
    "verify_lemma_132",
    "verify_lemma_good",
    "check_monotonicity",
    "theorem_applicability",
    "wilf_classes",
]
