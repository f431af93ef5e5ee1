"""
Exhaustive, pruned enumeration of pattern avoiders, stratified by length and
by number of skew blocks.
"""

from .models import CountTable, PatternSet
from .engine import (
    AvoiderStream,
    as_pattern_set,
    avoiders_by_blocks,
    count_avoiders,
    count_by_blocks,
    count_vector,
    enumerate_avoiders,
)

__all__ = [
    "CountTable",
    "PatternSet",
    "AvoiderStream",
    "as_pattern_set",
    "avoiders_by_blocks",
    "count_avoiders",
    "count_by_blocks",
    "count_vector",
    "enumerate_avoiders",
]
