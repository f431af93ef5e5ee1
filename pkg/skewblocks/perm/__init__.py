"""
Permutations and patterns: parsing, containment, symmetries and skew blocks.
"""

from .permutation import (
    Permutation,
    all_permutations,
    complement,
    parse_pattern_list,
    parse_permutation,
    reverse,
    standardize,
    symmetry_class,
)
from .containment import avoids, contains, contains_naive, find_occurrence, occurs_in
from .skew import (
    SkewDecomposition,
    block_count,
    cut_positions,
    is_good,
    is_skew_indecomposable,
    segments,
    skew_decompose,
    skew_sum,
)

__all__ = [
    "Permutation",
    "all_permutations",
    "complement",
    "parse_pattern_list",
    "parse_permutation",
    "reverse",
    "standardize",
    "symmetry_class",
    "avoids",
    "contains",
    "contains_naive",
    "find_occurrence",
    "occurs_in",
    "SkewDecomposition",
    "block_count",
    "cut_positions",
    "is_good",
    "is_skew_indecomposable",
    "segments",
    "skew_decompose",
    "skew_sum",
]
