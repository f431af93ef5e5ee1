"""
Shared fixtures for the skewblocks test suite.

Count tables are session-scoped: they are exact and immutable in practice,
and several modules compare against the same ones.
"""

import sys
from pathlib import Path
from typing import Callable, List

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from skewblocks.enumeration import CountTable, count_by_blocks
from skewblocks.perm import Permutation, all_permutations, contains_naive, parse_permutation


@pytest.fixture(scope="session")
def table_132() -> CountTable:
    return count_by_blocks(10, ["132"], workers=1)


@pytest.fixture(scope="session")
def table_123_132() -> CountTable:
    return count_by_blocks(12, ["123", "132"], workers=1)


@pytest.fixture
def naive_avoiders() -> Callable[[int, List[str]], List[Permutation]]:
    """Filter all n! permutations with the all-subsequences containment test."""
    def _avoiders(n: int, patterns: List[str]) -> List[Permutation]:
        qs = [parse_permutation(q) for q in patterns]
        return [p for p in all_permutations(n) if not any(contains_naive(p, q) for q in qs)]

    return _avoiders
