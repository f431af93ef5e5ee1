"""
Pruned exhaustive enumeration of pattern avoiders.

Permutations are grown one entry at a time, values tried in increasing order,
so leaves come out in lexicographic order. A prefix is abandoned as soon as
it contains a pattern of S; since the prefix before the new entry already
avoided S, only occurrences that end at the new entry need checking.

Skew blocks are counted along the way: for a permutation of 1..n, the cut
after position i is a skew cut exactly when the first i entries are the i
largest values, i.e. when their running minimum equals n - i + 1.

Counting splits the search tree by first entry; the n subtrees are
independent and are summed in a fixed order, so any worker count gives the
same table.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple, Union

from skewblocks.core.config import config
from skewblocks.core.exceptions import PreconditionError, ResourceGuardError
from skewblocks.core.worker_pool import WorkerPool
from skewblocks.enumeration.models import CountTable, PatternSet
from skewblocks.perm.containment import occurs_in
from skewblocks.perm.permutation import Permutation

logger = logging.getLogger(__name__)

# Below this length a process pool costs more than the search itself
PARALLEL_MIN_N = 9

Leaf = Tuple[Tuple[int, ...], int]


def check_ceiling(n: int, ceiling: Optional[int]) -> None:
    limit = config.N_CEILING if ceiling is None else ceiling
    if n > limit:
        raise ResourceGuardError(f"n={n} exceeds the enumeration ceiling {limit}")


def _extends_badly(prefix: List[int], patterns: Tuple[Tuple[int, ...], ...]) -> bool:
    return any(occurs_in(prefix, q, anchor_last=True) for q in patterns)


def _walk(n: int, patterns: Tuple[Tuple[int, ...], ...], first: Optional[int] = None) -> Iterator[Leaf]:
    """
    Yield (values, block_count) for every avoider of length n, in
    lexicographic order; restricted to avoiders starting with `first` if given.
    """
    if n == 0:
        yield (), 0
        return

    used = [False] * (n + 1)
    prefix: List[int] = []

    def extend(running_min: int, cuts: int) -> Iterator[Leaf]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix), cuts + 1
            return
        candidates = range(1, n + 1) if (i > 0 or first is None) else (first,)
        for v in candidates:
            if used[v]:
                continue
            prefix.append(v)
            if not _extends_badly(prefix, patterns):
                used[v] = True
                new_min = min(running_min, v)
                length = i + 1
                cut_here = length < n and new_min == n - length + 1
                yield from extend(new_min, cuts + (1 if cut_here else 0))
                used[v] = False
            prefix.pop()

    yield from extend(n + 1, 0)


def _subtree_counts(n: int, patterns: Tuple[Tuple[int, ...], ...], first: Optional[int] = None) -> List[int]:
    """counts[l] = avoiders of length n (starting with `first`, if given) that have l skew blocks."""
    counts = [0] * (n + 1)
    for _, blocks in _walk(n, patterns, first):
        counts[blocks] += 1
    return counts


def _block_counts(n: int, pattern_set: PatternSet, workers: int) -> List[int]:
    """Length-n avoider counts indexed by block count (index 0 unused)."""
    if n == 0:
        return [1]
    patterns = pattern_set.values
    if workers <= 1 or n < PARALLEL_MIN_N:
        return _subtree_counts(n, patterns)

    with WorkerPool(workers) as pool:
        for first in range(1, n + 1):
            pool.add_task(_subtree_counts, n, patterns, first, name=f"n={n},first={first}")
        partials = pool.gather()

    counts = [0] * (n + 1)
    for partial in partials:
        for ell, c in enumerate(partial):
            counts[ell] += c
    return counts


@dataclass(frozen=True)
class AvoiderStream:
    """
    The avoiders of length n, in lexicographic order.
    Iterating again reruns the search, so the stream can be restarted.
    """
    n: int
    pattern_set: PatternSet

    def __iter__(self) -> Iterator[Permutation]:
        for values, _ in _walk(self.n, self.pattern_set.values):
            yield Permutation(values)


def as_pattern_set(S: Union[PatternSet, Permutation, str, list, tuple]) -> PatternSet:
    """Accept a PatternSet, a single pattern, or a list of patterns."""
    if isinstance(S, PatternSet):
        return S
    if isinstance(S, (list, tuple)):
        return PatternSet.of(*S)
    return PatternSet.of(S)


def enumerate_avoiders(n: int, S, ceiling: Optional[int] = None) -> AvoiderStream:
    """
    Stream every permutation of length n avoiding all patterns of S.

    Examples:
        n=3, S={132}       -> 5 permutations
        n=4, S={123, 132}  -> 8 permutations
    """
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    check_ceiling(n, ceiling)
    return AvoiderStream(n, as_pattern_set(S))


def count_avoiders(n: int, S, ceiling: Optional[int] = None, workers: Optional[int] = None) -> int:
    """
    Av_n(S) without materializing the avoiders.

    Raises:
        ResourceGuardError: n above the ceiling (default config.N_CEILING)
    """
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    check_ceiling(n, ceiling)
    workers = config.resolve_workers(workers)
    return sum(_block_counts(n, as_pattern_set(S), workers))


def count_by_blocks(n_max: int, S, ceiling: Optional[int] = None, workers: Optional[int] = None) -> CountTable:
    """
    Fill the CountTable Av_{n,l}(S) for 1 <= l <= n <= n_max.

    Examples:
        S={132}, row n=4 -> [5, 5, 3, 1]
    """
    if n_max < 1:
        raise PreconditionError(f"n_max must be at least 1, got {n_max}")
    check_ceiling(n_max, ceiling)
    pattern_set = as_pattern_set(S)
    workers = config.resolve_workers(workers)

    logger.info(f"Counting avoiders of {pattern_set} up to n={n_max} with {workers} worker(s)")
    total = [1]
    by_blocks: List[List[int]] = [[]]
    for n in range(1, n_max + 1):
        counts = _block_counts(n, pattern_set, workers)
        by_blocks.append(counts[1:])
        total.append(sum(counts))
        logger.debug(f"n={n}: total={total[-1]}")

    return CountTable(pattern_set=pattern_set, n_max=n_max, total=total, by_blocks=by_blocks)


def avoiders_by_blocks(n: int, S, ell: int, ceiling: Optional[int] = None) -> List[Permutation]:
    """The avoiders of length n with exactly ell skew blocks, lexicographically sorted."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    check_ceiling(n, ceiling)
    pattern_set = as_pattern_set(S)
    return [Permutation(values) for values, blocks in _walk(n, pattern_set.values) if blocks == ell]


@lru_cache(maxsize=1024)
def _cached_vector(pattern_set: PatternSet, n_max: int) -> Tuple[int, ...]:
    return tuple(sum(_block_counts(n, pattern_set, 1)) for n in range(1, n_max + 1))


def count_vector(S, n_max: int, ceiling: Optional[int] = None) -> Tuple[int, ...]:
    """(Av_1(S), ..., Av_{n_max}(S)), cached per process."""
    check_ceiling(n_max, ceiling)
    return _cached_vector(as_pattern_set(S), n_max)
