"""
Enumeration Data Models

PatternSet is the (normalized) set of forbidden patterns S.
CountTable is the ballot-type table of exact counts:
    total[n]        = Av_n(S)         for 0 <= n <= n_max
    by_blocks[n][l] = Av_{n,l}(S)     for 1 <= l <= n <= n_max
All counts are Python integers, so no table ever overflows.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

from skewblocks.core.exceptions import PreconditionError, SerializationError
from skewblocks.perm.containment import contains
from skewblocks.perm.permutation import Permutation, parse_permutation


def _normalize(patterns: Iterable[Permutation]) -> Tuple[Permutation, ...]:
    """Deduplicate, drop every pattern containing another member, sort."""
    unique = sorted(set(patterns))
    kept = []
    for q in unique:
        if any(other != q and contains(q, other) for other in unique):
            continue
        kept.append(q)
    return tuple(kept)


@dataclass(frozen=True)
class PatternSet:
    """
    A nonempty set of patterns with no member containing another.

    A pattern that contains another member is redundant: every permutation
    containing it also contains the smaller member, so dropping it leaves the
    avoider sets unchanged.
    """
    patterns: Tuple[Permutation, ...]

    def __post_init__(self):
        patterns = tuple(self.patterns)
        if not patterns:
            raise PreconditionError("a pattern set needs at least one pattern")
        for q in patterns:
            if len(q) == 0:
                raise PreconditionError("the empty pattern cannot be avoided")
        object.__setattr__(self, "patterns", _normalize(patterns))

    @classmethod
    def of(cls, *patterns) -> "PatternSet":
        """PatternSet.of("123", "132") or PatternSet.of(Permutation.of(1, 3, 2))"""
        parsed = [parse_permutation(q) if isinstance(q, str) else q for q in patterns]
        return cls(tuple(parsed))

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __str__(self) -> str:
        return "{" + ", ".join(str(q) for q in self.patterns) + "}"

    @property
    def values(self) -> Tuple[Tuple[int, ...], ...]:
        """Plain tuples, cheap to ship to worker processes."""
        return tuple(q.values for q in self.patterns)

    def to_list(self) -> List[str]:
        return [str(q) for q in self.patterns]


@dataclass
class CountTable:
    """
    Exact counts of S-avoiders by length and by number of skew blocks.

    Attributes:
        pattern_set: The patterns avoided
        n_max: Largest length counted
        total: total[n] = Av_n(S), n = 0..n_max
        by_blocks: by_blocks[n] is the list [Av_{n,1}(S), ..., Av_{n,n}(S)];
                   by_blocks[0] is empty
    """
    pattern_set: PatternSet
    n_max: int
    total: List[int] = field(default_factory=list)
    by_blocks: List[List[int]] = field(default_factory=list)

    def count(self, n: int, ell: int) -> int:
        """Av_{n,ell}(S); 0 whenever ell > n or ell < 1."""
        if n < 0 or n > self.n_max:
            raise PreconditionError(f"n={n} outside the table (n_max={self.n_max})")
        if ell < 1 or ell > n:
            return 0
        return self.by_blocks[n][ell - 1]

    def row(self, n: int) -> List[int]:
        """Av_{n,1..n_max}(S), zero-padded to n_max columns."""
        return [self.count(n, ell) for ell in range(1, self.n_max + 1)]

    def check_invariants(self) -> List[str]:
        """Return descriptions of every broken table invariant (empty when sound)."""
        problems = []
        if len(self.total) != self.n_max + 1 or len(self.by_blocks) != self.n_max + 1:
            problems.append("table shape does not match n_max")
            return problems
        if self.total[0] != 1:
            problems.append(f"total[0] = {self.total[0]}, expected 1")
        for n in range(1, self.n_max + 1):
            if len(self.by_blocks[n]) != n:
                problems.append(f"row {n} has {len(self.by_blocks[n])} block columns")
            elif sum(self.by_blocks[n]) != self.total[n]:
                problems.append(
                    f"row {n}: block counts sum to {sum(self.by_blocks[n])}, total is {self.total[n]}"
                )
        return problems

    # ===== SERIALIZATION =====

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {
            "patterns": self.pattern_set.to_list(),
            "n_max": self.n_max,
            "total": list(self.total),
            "by_blocks": [list(r) for r in self.by_blocks],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CountTable":
        try:
            table = cls(
                pattern_set=PatternSet.of(*data["patterns"]),
                n_max=int(data["n_max"]),
                total=[int(v) for v in data["total"]],
                by_blocks=[[int(v) for v in r] for r in data["by_blocks"]],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"not a count table: {e}") from e
        problems = table.check_invariants()
        if problems:
            raise SerializationError("; ".join(problems))
        return table

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SerializationError(f"invalid JSON: {e}") from e
        return cls.from_dict(data)

    def to_csv(self) -> str:
        """Rows n = 0..n_max; columns n, ell_1..ell_{n_max}, total."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n"] + [f"ell_{ell}" for ell in range(1, self.n_max + 1)] + ["total"])
        for n in range(self.n_max + 1):
            writer.writerow([n] + self.row(n) + [self.total[n]])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str, pattern_set: PatternSet) -> "CountTable":
        """CSV carries no pattern header, so the caller supplies the pattern set."""
        rows = list(csv.reader(io.StringIO(text)))
        if not rows:
            raise SerializationError("empty CSV")
        header, body = rows[0], rows[1:]
        n_max = len(header) - 2
        if n_max < 0 or header[0] != "n" or header[-1] != "total":
            raise SerializationError(f"unexpected CSV header {header}")
        try:
            total = []
            by_blocks = []
            for expected_n, r in enumerate(body):
                n = int(r[0])
                if n != expected_n:
                    raise SerializationError(f"row {expected_n} labelled n={n}")
                by_blocks.append([int(v) for v in r[1:1 + n]])
                total.append(int(r[-1]))
        except (IndexError, ValueError) as e:
            raise SerializationError(f"malformed CSV row: {e}") from e

        table = cls(pattern_set=pattern_set, n_max=n_max, total=total, by_blocks=by_blocks)
        problems = table.check_invariants()
        if problems:
            raise SerializationError("; ".join(problems))
        return table
