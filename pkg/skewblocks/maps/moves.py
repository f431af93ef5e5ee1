"""
The three entry moves between avoiders with one and with two skew blocks.

    f: move the maximum to the last position
    g: move the rightmost entry of the first skew block to the last position
    h: move the last entry to just before the rightmost skew block of the rest

h undoes g on every permutation with exactly two skew blocks, whether or not
it avoids anything.
"""

from skewblocks.core.exceptions import PreconditionError
from skewblocks.perm.permutation import Permutation
from skewblocks.perm.skew import cut_positions


def f_move_max(p: Permutation) -> Permutation:
    """
    534612 -> 534126; a permutation ending in its maximum is a fixed point.
    """
    if len(p) == 0:
        raise PreconditionError("f needs a nonempty permutation")
    values = list(p.values)
    values.remove(len(p))
    values.append(len(p))
    return Permutation(tuple(values))


def h_move_last_left_of_rightmost_block(w: Permutation) -> Permutation:
    """
    534126 -> 534612: the prefix 53412 splits as 5|34|12, so 6 goes before 12.
    """
    if len(w) < 2:
        raise PreconditionError(f"h needs length >= 2, got {len(w)}")
    prefix, last = list(w.values[:-1]), w.values[-1]
    cuts = cut_positions(prefix)
    start = cuts[-1] if cuts else 0
    return Permutation(tuple(prefix[:start] + [last] + prefix[start:]))


def g_move_rightmost_big(p: Permutation) -> Permutation:
    """
    3412 -> 3124. The "big" entries form the first of exactly two skew blocks.

    Raises:
        PreconditionError: p does not have exactly two skew blocks
    """
    cuts = cut_positions(p.values) if len(p) else []
    if len(cuts) != 1:
        raise PreconditionError(f"g needs exactly 2 skew blocks, {p} has {len(cuts) + 1 if len(p) else 0}")
    split = cuts[0]
    values = list(p.values)
    big = values.pop(split - 1)
    values.append(big)
    return Permutation(tuple(values))
