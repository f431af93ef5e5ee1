"""
Decide whether a pattern is covered by the monotone block-count theorem.

A skew-indecomposable q is covered when its first entry is not 1, when its
last entry is not k, or when it is Wilf-equivalent to a skew-indecomposable
pattern of the first two kinds. A skew-decomposable q is handled through
its reverse, which is always skew indecomposable.

Usage:
    from skewblocks.classify import theorem_applicability

    report = theorem_applicability(Permutation.of(1, 2, 3, 4), depth=8)
    report.condition   # Condition.WILF_EQUIVALENT_TO_COVERED
    report.witness     # 1243
"""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from skewblocks.core.config import config
from skewblocks.core.exceptions import PreconditionError
from skewblocks.classify.models import ApplicabilityReport, Condition
from skewblocks.classify.monotonicity import check_monotonicity
from skewblocks.enumeration.engine import check_ceiling, count_vector
from skewblocks.perm.permutation import Permutation, all_permutations, complement, reverse
from skewblocks.perm.skew import is_good, is_skew_indecomposable

logger = logging.getLogger(__name__)

KNOWN_TABLE = "known table"


def syntactic_condition(q: Permutation) -> Optional[Condition]:
    """Condition 1 or 2 on a skew-indecomposable pattern, or None."""
    if q.values[0] != 1:
        return Condition.FIRST_ENTRY_NOT_1
    if q.values[-1] != len(q):
        return Condition.LAST_ENTRY_NOT_K
    return None


def _is_covered_witness(q: Permutation) -> bool:
    return is_skew_indecomposable(q) and syntactic_condition(q) is not None


def _monotone_partner(q: Permutation) -> Optional[Permutation]:
    """12...k -> 12...(k-2)k(k-1) for k >= 3."""
    k = len(q)
    if k < 3 or q != Permutation.identity(k):
        return None
    return Permutation(tuple(range(1, k - 1)) + (k, k - 1))


class KnownEquivalenceTable:
    """
    Wilf equivalences accepted without computation.

    The built-in table holds the monotone family only. extend() adds pairs;
    a witness must be skew indecomposable and satisfy condition 1 or 2.
    """

    def __init__(self, include_monotone: bool = True):
        self.include_monotone = include_monotone
        self._pairs: Dict[Permutation, Permutation] = {}
        self._sources: Dict[Permutation, str] = {}

    @classmethod
    def builtin(cls) -> "KnownEquivalenceTable":
        return cls(include_monotone=True)

    def extend(self, q: Permutation, witness: Permutation, source: str = KNOWN_TABLE) -> None:
        if len(q) != len(witness):
            raise PreconditionError(f"{q} and {witness} have different lengths")
        if not _is_covered_witness(witness):
            raise PreconditionError(f"{witness} is not a covered skew-indecomposable pattern")
        self._pairs[q] = witness
        self._sources[q] = source
        logger.debug(f"Known equivalence added: {q} ~ {witness} ({source})")

    def lookup(self, q: Permutation) -> Optional[Tuple[Permutation, str]]:
        if q in self._pairs:
            return self._pairs[q], self._sources[q]
        if self.include_monotone:
            partner = _monotone_partner(q)
            if partner is not None:
                return partner, KNOWN_TABLE
        return None

    def __len__(self) -> int:
        return len(self._pairs) + (1 if self.include_monotone else 0)


def _symmetries(q: Permutation) -> Iterator[Permutation]:
    yield q
    yield reverse(q)
    yield complement(q)
    yield complement(reverse(q))


def good_symmetric_form(q: Permutation) -> Optional[Permutation]:
    """
    First of q, q^r, q^c, q^rc that is good and skew indecomposable.
    Symmetries preserve avoider counts, so the good-pattern injection on
    this form transfers to q.
    """
    for candidate in _symmetries(q):
        if is_skew_indecomposable(candidate) and is_good(candidate):
            return candidate
    return None


def skew_indecomposable_form(q: Permutation) -> Permutation:
    """q when skew indecomposable, otherwise reverse(q)."""
    return q if is_skew_indecomposable(q) else reverse(q)


def _empirical_witness(form: Permutation, depth: int, ceiling: Optional[int]) -> Optional[Permutation]:
    target = count_vector([form], depth, ceiling=ceiling)
    for candidate in all_permutations(len(form)):
        if candidate == form or not _is_covered_witness(candidate):
            continue
        if count_vector([candidate], depth, ceiling=ceiling) == target:
            return candidate
    return None


def theorem_applicability(
    q: Permutation,
    depth: Optional[int] = None,
    table: Optional[KnownEquivalenceTable] = None,
    ceiling: Optional[int] = None,
) -> ApplicabilityReport:
    """
    Which route, if any, covers q.

    Args:
        q: Pattern of length >= 2
        depth: N for empirical Wilf evidence (default config.WILF_DEPTH)
        table: Known equivalences (default: built-in monotone family)
        ceiling: Enumeration ceiling (default config.N_CEILING)

    Returns:
        ApplicabilityReport; condition 3 always carries a witness

    Raises:
        PreconditionError: length < 2 or depth < length
        ResourceGuardError: depth above the enumeration ceiling
    """
    depth = config.WILF_DEPTH if depth is None else depth
    table = KnownEquivalenceTable.builtin() if table is None else table
    k = len(q)
    if k < 2:
        raise PreconditionError(f"pattern length must be at least 2, got {k}")
    if depth < k:
        raise PreconditionError(f"depth {depth} is below the pattern length {k}")
    check_ceiling(depth, ceiling)

    form = skew_indecomposable_form(q)
    condition = syntactic_condition(form)
    if condition is not None:
        report = ApplicabilityReport(
            pattern=q,
            skew_indecomposable_form=form,
            condition=condition,
            depth=depth,
            evidence="syntactic",
            good_form=good_symmetric_form(form),
        )
        logger.debug(f"{q}: {condition.value}")
        return report

    known = table.lookup(form)
    if known is not None:
        witness, evidence = known
    else:
        witness = _empirical_witness(form, depth, ceiling)
        evidence = f"empirical to n = {depth}"

    if witness is None:
        logger.info(f"{q}: no covered Wilf-equivalent witness to n={depth}")
        violations = check_monotonicity([form], depth, ceiling=ceiling, workers=1)
        if violations:
            observation = f"block counts not monotone: first violation at (n, l) = ({violations[0].n}, {violations[0].ell})"
        else:
            observation = f"block counts numerically monotone to n = {depth} (observation, not a verdict)"
        return ApplicabilityReport(
            pattern=q,
            skew_indecomposable_form=form,
            condition=Condition.NOT_COVERED,
            depth=depth,
            observations=[observation],
        )

    logger.info(f"{q}: Wilf-equivalent to {witness} ({evidence})")
    return ApplicabilityReport(
        pattern=q,
        skew_indecomposable_form=form,
        condition=Condition.WILF_EQUIVALENT_TO_COVERED,
        depth=depth,
        witness=witness,
        evidence=evidence,
        good_form=good_symmetric_form(witness),
    )


def applicability_for_length(
    k: int,
    depth: Optional[int] = None,
    ceiling: Optional[int] = None,
) -> List[ApplicabilityReport]:
    """Reports for every pattern of length k, lexicographic."""
    return [theorem_applicability(q, depth, ceiling=ceiling) for q in all_permutations(k)]
