"""
Monotonicity of the block-count table in the block index.
"""

import logging
from typing import List, Optional

from skewblocks.core.exceptions import PreconditionError
from skewblocks.classify.models import BlockCellMismatch, MonotonicityViolation
from skewblocks.enumeration.engine import as_pattern_set, count_by_blocks
from skewblocks.enumeration.models import CountTable
from skewblocks.perm.permutation import Permutation
from skewblocks.perm.skew import is_skew_indecomposable

logger = logging.getLogger(__name__)


def table_violations(table: CountTable, strict: bool = False) -> List[MonotonicityViolation]:
    """
    Cells with Av_{n,l+1} > Av_{n,l}, 1 <= l <= n-1. With strict, also
    Av_{n,l+1} >= Av_{n,l} for 2 <= l <= n-1.
    """
    violations = []
    for n in range(2, table.n_max + 1):
        for ell in range(1, n):
            lower, upper = table.count(n, ell), table.count(n, ell + 1)
            if upper > lower or (strict and ell >= 2 and upper >= lower):
                violations.append(MonotonicityViolation(n=n, ell=ell, lower=lower, upper=upper))
    return violations


def check_monotonicity(
    S,
    n_max: int,
    strict: bool = False,
    ceiling: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[MonotonicityViolation]:
    """
    Scan the CountTable of S for cells where the block count goes up.

    Examples:
        S={132}, n_max=9        -> []
        S={123, 132}, n_max=6   -> (3,1), (4,1), (5,1), (6,1), ...

    Returns:
        Violations sorted by (n, l); empty means monotone to n_max
    """
    table = count_by_blocks(n_max, as_pattern_set(S), ceiling=ceiling, workers=workers)
    violations = table_violations(table, strict=strict)
    logger.info(f"Monotonicity of {table.pattern_set} to n={n_max}: {len(violations)} violation(s)")
    return violations


def block_table_mismatches(
    q: Permutation,
    other: Permutation,
    n_max: int,
    ceiling: Optional[int] = None,
) -> List[BlockCellMismatch]:
    """
    Cells where two Wilf-equivalent skew-indecomposable patterns have
    different block counts.

    Raises:
        PreconditionError: a pattern is skew decomposable, or the totals differ
    """
    for pattern in (q, other):
        if not is_skew_indecomposable(pattern):
            raise PreconditionError(f"{pattern} is not skew indecomposable")

    mine = count_by_blocks(n_max, [q], ceiling=ceiling)
    theirs = count_by_blocks(n_max, [other], ceiling=ceiling)
    for n in range(n_max + 1):
        if mine.total[n] != theirs.total[n]:
            raise PreconditionError(
                f"{q} and {other} are not Wilf-equivalent: Av_{n} is {mine.total[n]} vs {theirs.total[n]}"
            )

    mismatches = []
    for n in range(1, n_max + 1):
        for ell in range(1, n + 1):
            a, b = mine.count(n, ell), theirs.count(n, ell)
            if a != b:
                mismatches.append(BlockCellMismatch(n=n, ell=ell, left=a, right=b))
    return mismatches
