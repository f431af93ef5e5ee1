"""
Classification Data Models

ApplicabilityReport  - which route (if any) puts a pattern under the
                       monotone block-count theorem
WilfClassification   - patterns of one length grouped by count vector
MonotonicityViolation - one (n, l) cell where Av_{n,l+1} breaks the bound
"""

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from skewblocks.perm.permutation import Permutation


class Condition(str, Enum):
    """How a pattern is covered"""
    FIRST_ENTRY_NOT_1 = "first_entry_not_1"
    LAST_ENTRY_NOT_K = "last_entry_not_k"
    WILF_EQUIVALENT_TO_COVERED = "wilf_equivalent_to_covered"
    NOT_COVERED = "not_covered"


@dataclass
class ApplicabilityReport:
    """
    Attributes:
        pattern: The pattern asked about
        skew_indecomposable_form: pattern, or its reverse when pattern is skew decomposable
        condition: Which route applies
        depth: Comparison depth N used for empirical Wilf evidence
        witness: Covered pattern Wilf-equivalent to the form (condition 3 only)
        evidence: "known table", "empirical to n = N", or "syntactic"
        good_form: First good skew-indecomposable symmetry of the covered pattern
        observations: Remarks that are not verdicts (e.g. numerical monotonicity)
    """
    pattern: Permutation
    skew_indecomposable_form: Permutation
    condition: Condition
    depth: int
    witness: Optional[Permutation] = None
    evidence: str = ""
    good_form: Optional[Permutation] = None
    observations: List[str] = field(default_factory=list)

    @property
    def covered(self) -> bool:
        return self.condition != Condition.NOT_COVERED

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {
            "pattern": str(self.pattern),
            "skew_indecomposable_form": str(self.skew_indecomposable_form),
            "condition": self.condition.value,
            "covered": self.covered,
            "depth": self.depth,
            "witness": None if self.witness is None else str(self.witness),
            "evidence": self.evidence,
            "good_form": None if self.good_form is None else str(self.good_form),
            "observations": list(self.observations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class WilfClass:
    """Patterns sharing the count vector (Av_1, ..., Av_N)."""
    class_id: int
    patterns: Tuple[Permutation, ...]
    counts: Tuple[int, ...]
    symmetry_only: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class_id": self.class_id,
            "patterns": [str(q) for q in self.patterns],
            "counts": list(self.counts),
            "symmetry_only": self.symmetry_only,
        }


@dataclass
class WilfClassification:
    """
    Partition of all patterns of length k by count vectors to depth N.
    Agreement to depth N is evidence, not proof.
    """
    k: int
    depth: int
    classes: List[WilfClass] = field(default_factory=list)

    @property
    def evidence(self) -> str:
        return f"empirical to n = {self.depth}"

    def class_of(self, q: Permutation) -> WilfClass:
        for wilf_class in self.classes:
            if q in wilf_class.patterns:
                return wilf_class
        raise KeyError(str(q))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "depth": self.depth,
            "evidence": self.evidence,
            "classes": [c.to_dict() for c in self.classes],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """One row per pattern: pattern, class_id, Av_1..Av_N."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["pattern", "class_id"] + [f"av_{n}" for n in range(1, self.depth + 1)])
        for wilf_class in self.classes:
            for q in wilf_class.patterns:
                writer.writerow([str(q), wilf_class.class_id] + list(wilf_class.counts))
        return buffer.getvalue()


@dataclass(frozen=True, order=True)
class MonotonicityViolation:
    """Av_{n,ell+1} = upper against Av_{n,ell} = lower."""
    n: int
    ell: int
    lower: int
    upper: int

    def to_dict(self) -> Dict[str, int]:
        return {"n": self.n, "ell": self.ell, "av_n_ell": self.lower, "av_n_ell_plus_1": self.upper}


@dataclass(frozen=True, order=True)
class BlockCellMismatch:
    """Av_{n,ell}(q) = left differs from Av_{n,ell}(other) = right."""
    n: int
    ell: int
    left: int
    right: int

    def to_dict(self) -> Dict[str, int]:
        return {"n": self.n, "ell": self.ell, "left": self.left, "right": self.right}
