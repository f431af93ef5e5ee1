"""
Permutation value type and its textual formats.

A Permutation doubles as a pattern: the same immutable type is used for the
permutation p being tested and the pattern q it may contain.

Text formats:
    "132"                     compact digits, only when every value is <= 9
    "10,2,3,4,5,6,7,8,9,1"    comma-separated, always accepted
"""

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from skewblocks.core.exceptions import InvalidPermutationError


def _validate(values: Tuple[int, ...]) -> None:
    """Raise InvalidPermutationError unless values is a rearrangement of 1..n."""
    n = len(values)
    seen = set()
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidPermutationError(f"value {v!r} is not an integer")
        if v <= 0:
            raise InvalidPermutationError(f"value {v} is not positive")
        if v > n:
            raise InvalidPermutationError(f"value {v} exceeds length {n} (gap in values)")
        if v in seen:
            raise InvalidPermutationError(f"value {v} repeated")
        seen.add(v)


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation of 1..n in one-line notation.

    Attributes:
        values: The one-line notation, a rearrangement of 1..n (n may be 0)
    """
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        _validate(values)
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        """Permutation.of(1, 3, 2) -> 132"""
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __str__(self) -> str:
        if all(v <= 9 for v in self.values):
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def to_list(self) -> List[int]:
        return list(self.values)


def parse_permutation(text: str) -> Permutation:
    """
    Parse a permutation from compact digits or a comma-separated list.

    Args:
        text: e.g. "132" or "10,2,3,4,5,6,7,8,9,1"

    Returns:
        The parsed Permutation

    Raises:
        InvalidPermutationError: on malformed tokens, repeats, gaps, zero or negatives
    """
    text = text.strip()
    if not text:
        return Permutation(())

    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)

    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidPermutationError(f"invalid token {token!r} in {text!r}") from None

    return Permutation(tuple(values))


def standardize(values: Sequence[int]) -> Permutation:
    """Return the permutation order-isomorphic to a sequence of distinct integers."""
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    if len(ranks) != len(values):
        raise InvalidPermutationError(f"sequence {list(values)} has repeated values")
    return Permutation(tuple(ranks[v] for v in values))


def reverse(q: Permutation) -> Permutation:
    """q^r: read q right to left."""
    return Permutation(q.values[::-1])


def complement(q: Permutation) -> Permutation:
    """q^c: replace each value v by k+1-v."""
    k = len(q)
    return Permutation(tuple(k + 1 - v for v in q.values))


def symmetry_class(q: Permutation) -> Tuple[Permutation, ...]:
    """The distinct images of q under reverse, complement and their composition, sorted."""
    images = {q, reverse(q), complement(q), reverse(complement(q))}
    return tuple(sorted(images))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of length n in lexicographic order."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def parse_pattern_list(text: str) -> List[Permutation]:
    """
    Parse several patterns separated by whitespace, ';' or commas.

    A comma-separated chunk whose integers are exactly 1..m is one pattern in
    comma format ("10,2,3,4,5,6,7,8,9,1", "2,1"); any other comma-separated
    chunk is a list of compact patterns ("123,132", "132,1").
    """
    chunks: Iterable[str] = text.replace(";", " ").split()
    patterns: List[Permutation] = []
    for chunk in chunks:
        parts = [p.strip() for p in chunk.split(",") if p.strip()]
        if len(parts) > 1 and not _is_comma_permutation(parts):
            patterns.extend(parse_permutation(p) for p in parts)
        else:
            patterns.append(parse_permutation(chunk))
    return patterns


def _is_comma_permutation(parts: Sequence[str]) -> bool:
    try:
        values = sorted(int(p) for p in parts)
    except ValueError:
        return False
    return values == list(range(1, len(parts) + 1))
