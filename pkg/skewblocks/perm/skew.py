"""
Skew decomposition and the structural predicates built on it.

A cut after position i of a sequence is a skew cut when every entry before
it exceeds every entry after it. Cutting at every skew cut yields the skew
blocks; the blocks are skew indecomposable and their values decrease from
block to block.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from skewblocks.core.exceptions import PreconditionError
from skewblocks.perm.permutation import Permutation, standardize


@dataclass(frozen=True)
class SkewDecomposition:
    """
    The unique ordered list of skew blocks of a permutation.

    Attributes:
        blocks: Each block renormalized to a permutation of its own length
        offsets: Value offset of each block in the original permutation
    """
    blocks: Tuple[Permutation, ...]
    offsets: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def reassemble(self) -> Permutation:
        """Put the blocks back at their offsets."""
        values: List[int] = []
        for block, offset in zip(self.blocks, self.offsets):
            values.extend(v + offset for v in block.values)
        return Permutation(tuple(values))

    def to_dict(self) -> dict:
        return {
            "blocks": [str(b) for b in self.blocks],
            "offsets": list(self.offsets),
        }


def cut_positions(values: Sequence[int]) -> List[int]:
    """
    Positions i (1 <= i < n) with min(values[:i]) > max(values[i:]).
    Works on any sequence of distinct integers, not only on 1..n.
    """
    n = len(values)
    if n < 2:
        return []
    suffix_max = [0] * n
    running = values[-1]
    for i in range(n - 1, -1, -1):
        running = max(running, values[i])
        suffix_max[i] = running

    cuts = []
    prefix_min = values[0]
    for i in range(1, n):
        if prefix_min > suffix_max[i]:
            cuts.append(i)
        prefix_min = min(prefix_min, values[i])
    return cuts


def segments(values: Sequence[int]) -> List[Tuple[int, ...]]:
    """Split a sequence of distinct integers into its skew blocks (values kept)."""
    bounds = [0] + cut_positions(values) + [len(values)]
    return [tuple(values[a:b]) for a, b in zip(bounds, bounds[1:])]


def skew_decompose(p: Permutation) -> SkewDecomposition:
    """
    Cut p into its skew blocks.

    Examples:
        346512  -> 3465 | 12
        6743521 -> 67 | 435 | 2 | 1

    Raises:
        PreconditionError: for the empty permutation (block count undefined)
    """
    if len(p) == 0:
        raise PreconditionError("the empty permutation has no skew decomposition")

    blocks = []
    offsets = []
    for segment in segments(p.values):
        blocks.append(standardize(segment))
        offsets.append(min(segment) - 1)
    return SkewDecomposition(blocks=tuple(blocks), offsets=tuple(offsets))


def block_count(p: Permutation) -> int:
    """Number of skew blocks of a nonempty permutation."""
    if len(p) == 0:
        raise PreconditionError("the empty permutation has no skew blocks")
    return len(cut_positions(p.values)) + 1


def is_skew_indecomposable(p: Permutation) -> bool:
    return block_count(p) == 1


def skew_sum(blocks: Sequence[Permutation]) -> Permutation:
    """
    Concatenate blocks so that every value of block i exceeds every value of
    block j for i < j.

    Examples:
        skew_sum([12])    -> 12
        skew_sum([12, 1]) -> 231
    """
    for block in blocks:
        if len(block) == 0:
            raise PreconditionError("skew_sum blocks must be nonempty")

    remaining = sum(len(b) for b in blocks)
    values: List[int] = []
    for block in blocks:
        remaining -= len(block)
        values.extend(v + remaining for v in block.values)
    return Permutation(tuple(values))


def is_good(q: Permutation) -> bool:
    """
    True iff no segment q_{k-i}..q_{k-1} (1 <= i <= k-1) immediately before the
    last entry consists of exactly the values 1..i.

    Examples:
        132, 3142, 2143 -> True
        1324 (i=3), 35124 (i=2) -> False
    """
    k = len(q)
    if k == 0:
        raise PreconditionError("the empty pattern has no last entry")

    for i in range(1, k):
        if set(q.values[k - 1 - i:k - 1]) == set(range(1, i + 1)):
            return False
    return True
