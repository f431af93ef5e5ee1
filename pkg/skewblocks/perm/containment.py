"""
Pattern containment.

contains() runs a depth-first search over pattern positions: pattern entry
q_r is matched left to right, and its candidate value must fall strictly
between the values already matched to the nearest smaller and nearest larger
pattern entries among q_1..q_{r-1}. Candidates outside that interval are
never expanded.

contains_naive() checks every k-element subsequence and is kept as the oracle
the search is tested against.
"""

import itertools
from functools import lru_cache
from typing import Sequence, Tuple

from skewblocks.perm.permutation import Permutation, standardize


@lru_cache(maxsize=4096)
def _interval_bounds(q_values: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    """
    For each pattern index r: (index of the largest earlier entry below q_r,
    index of the smallest earlier entry above q_r), -1 when absent.
    """
    bounds = []
    for r, v in enumerate(q_values):
        below, above = -1, -1
        for s in range(r):
            w = q_values[s]
            if w < v and (below < 0 or w > q_values[below]):
                below = s
            elif w > v and (above < 0 or w < q_values[above]):
                above = s
        bounds.append((below, above))
    return tuple(bounds)


def occurs_in(values: Sequence[int], q_values: Tuple[int, ...], anchor_last: bool = False) -> bool:
    """
    True iff some subsequence of values (distinct integers) is order-isomorphic
    to q_values. With anchor_last, the match must use the final entry of values
    as its final entry; this is the only new match a one-entry extension of an
    avoiding prefix can create.
    """
    n, k = len(values), len(q_values)
    if k == 0:
        return True
    if k > n:
        return False

    bounds = _interval_bounds(q_values)
    matched = [0] * k

    def dfs(r: int, start: int) -> bool:
        below, above = bounds[r]
        lo = matched[below] if below >= 0 else None
        hi = matched[above] if above >= 0 else None

        if anchor_last and r == k - 1:
            v = values[n - 1]
            return start <= n - 1 and (lo is None or v > lo) and (hi is None or v < hi)

        # leave room for the k-1-r entries still to place
        for i in range(start, n - k + r + 1):
            v = values[i]
            if lo is not None and v < lo:
                continue
            if hi is not None and v > hi:
                continue
            if r == k - 1:
                return True
            matched[r] = v
            if dfs(r + 1, i + 1):
                return True
        return False

    return dfs(0, 0)


def contains(p: Permutation, q: Permutation) -> bool:
    """
    True iff p contains the pattern q.

    Examples:
        >>> contains(parse_permutation("3752416"), parse_permutation("2413"))
        True
    """
    return occurs_in(p.values, q.values)


def avoids(p: Permutation, q: Permutation) -> bool:
    return not contains(p, q)


def contains_naive(p: Permutation, q: Permutation) -> bool:
    """All-subsequences oracle for contains()."""
    k = len(q)
    if k == 0:
        return True
    for idx in itertools.combinations(range(len(p)), k):
        if standardize([p.values[i] for i in idx]) == q:
            return True
    return False


def find_occurrence(p: Permutation, q: Permutation) -> Tuple[int, ...]:
    """
    1-based positions of the lexicographically first occurrence of q in p,
    or an empty tuple when p avoids q.
    """
    k = len(q)
    for idx in itertools.combinations(range(len(p)), k):
        if standardize([p.values[i] for i in idx]) == q:
            return tuple(i + 1 for i in idx)
    return ()
