"""
Map Verification Models

MapReport collects what an exhaustive run of a map over a finite domain
found: sizes, the three properties, and every input that broke a claim.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from skewblocks.perm.permutation import Permutation


@dataclass(frozen=True)
class Counterexample:
    """An input on which a claimed property failed."""
    input: Permutation
    output: Optional[Permutation]
    diagnosis: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "input": str(self.input),
            "output": None if self.output is None else str(self.output),
            "diagnosis": self.diagnosis,
        }


@dataclass
class MapReport:
    """
    Evidence from running a map over every element of its domain.

    Attributes:
        map_name: Which map was run (f, g, h∘g)
        pattern: The avoided pattern, None when the domain is unrestricted
        n: Permutation length
        domain_size: Size of the domain enumerated
        image_size: Number of distinct images
        codomain_size: Size of the target set (None when not enumerated)
        well_defined: Every image landed in the codomain
        injective: No two inputs share an image and the inverse recovered each input
        surjective: The image is the whole codomain
        claims_surjective: Whether surjectivity is part of the claim under test
        counterexamples: Inputs that broke a claimed property, lexicographic
        notes: Free-text remarks (strict cases, runs outside the hypotheses)
    """
    map_name: str
    pattern: Optional[Permutation]
    n: int
    domain_size: int = 0
    image_size: int = 0
    codomain_size: Optional[int] = None
    well_defined: bool = True
    injective: bool = True
    surjective: bool = False
    claims_surjective: bool = False
    counterexamples: List[Counterexample] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every claimed property held."""
        if self.counterexamples or not self.well_defined or not self.injective:
            return False
        return self.surjective or not self.claims_surjective

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {
            "map": self.map_name,
            "pattern": None if self.pattern is None else str(self.pattern),
            "n": self.n,
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "codomain_size": self.codomain_size,
            "well_defined": self.well_defined,
            "injective": self.injective,
            "surjective": self.surjective,
            "claims_surjective": self.claims_surjective,
            "passed": self.passed,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        """One line for the text renderer."""
        target = "" if self.codomain_size is None else f" -> {self.codomain_size}"
        status = "PASS" if self.passed else "FAIL"
        pattern = "any" if self.pattern is None else str(self.pattern)
        return (
            f"{status} {self.map_name} q={pattern} n={self.n}: "
            f"{self.domain_size}{target}, image {self.image_size}, "
            f"well_defined={self.well_defined} injective={self.injective} "
            f"surjective={self.surjective} counterexamples={len(self.counterexamples)}"
        )
