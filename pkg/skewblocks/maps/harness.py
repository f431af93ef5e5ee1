"""
Exhaustive harnesses for the block-moving maps.

Each harness enumerates the whole domain (no sampling), applies the map,
and records sizes, properties and every failing input in a MapReport.
Domains are walked in lexicographic order, so reports are deterministic.
"""

import logging
from typing import Callable, List, Optional, Set

from skewblocks.core.exceptions import PreconditionError
from skewblocks.enumeration.engine import avoiders_by_blocks, check_ceiling
from skewblocks.maps.models import Counterexample, MapReport
from skewblocks.maps.moves import f_move_max, g_move_rightmost_big, h_move_last_left_of_rightmost_block
from skewblocks.perm.containment import avoids
from skewblocks.perm.permutation import Permutation, all_permutations
from skewblocks.perm.skew import block_count, is_good, is_skew_indecomposable

logger = logging.getLogger(__name__)

OUTSIDE_HYPOTHESES = "outside the good-pattern hypotheses"

Move = Callable[[Permutation], Permutation]


def _run_injection(
    report: MapReport,
    q: Permutation,
    domain: List[Permutation],
    codomain: List[Permutation],
    move: Move,
) -> Set[Permutation]:
    """Apply move to each element of domain, checking landing set and the inverse h."""
    images: Set[Permutation] = set()
    codomain_set = set(codomain)

    for p in domain:
        image = move(p)
        if not avoids(image, q):
            report.well_defined = False
            report.counterexamples.append(Counterexample(p, image, f"image contains {q}"))
        elif not is_skew_indecomposable(image):
            report.well_defined = False
            report.counterexamples.append(
                Counterexample(p, image, f"image has {block_count(image)} skew blocks")
            )
        elif image not in codomain_set:
            report.well_defined = False
            report.counterexamples.append(Counterexample(p, image, "image outside the one-block avoiders"))

        if h_move_last_left_of_rightmost_block(image) != p:
            report.counterexamples.append(Counterexample(p, image, "h does not recover the input"))
        if image in images:
            report.counterexamples.append(Counterexample(p, image, "image already hit"))
        images.add(image)

    report.domain_size = len(domain)
    report.image_size = len(images)
    report.injective = report.image_size == report.domain_size
    report.codomain_size = len(codomain)
    report.surjective = images == codomain_set
    return images


def verify_lemma_good(
    q: Permutation,
    n: int,
    diagnostic: bool = False,
    ceiling: Optional[int] = None,
) -> MapReport:
    """
    Run g over the two-block avoiders of q of length n.

    For a good skew-indecomposable q, g must send every such avoider to a
    one-block avoider, and h must undo it. Surjectivity is recorded but not
    claimed.

    Args:
        q: The pattern
        n: Length of the permutations
        diagnostic: Run even when q is not good (the report is labelled)
        ceiling: Enumeration ceiling (default config.N_CEILING)

    Raises:
        PreconditionError: q is not good or not skew indecomposable (unless diagnostic)
    """
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")

    notes = []
    failed = []
    if not is_good(q):
        failed.append(f"{q} is not good")
    if not is_skew_indecomposable(q):
        failed.append(f"{q} is not skew indecomposable")
    if failed:
        if not diagnostic:
            raise PreconditionError("; ".join(failed))
        notes.append(f"{OUTSIDE_HYPOTHESES} ({'; '.join(failed)})")

    report = MapReport(map_name="g", pattern=q, n=n, notes=notes)
    domain = avoiders_by_blocks(n, [q], 2, ceiling=ceiling)
    codomain = avoiders_by_blocks(n, [q], 1, ceiling=ceiling)
    _run_injection(report, q, domain, codomain, g_move_rightmost_big)

    logger.info(f"g over Av_{{{n},2}}({q}): {report.summary()}")
    return report


def verify_lemma_132(n: int, ceiling: Optional[int] = None) -> MapReport:
    """
    f is a bijection from the two-block to the one-block 132-avoiders of
    length n (n >= 2), and every one-block 132-avoider ends in its maximum.

    n = 1 is the strict case: one one-block avoider, no two-block ones.
    """
    q = Permutation.of(1, 3, 2)
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    if n == 1:
        return MapReport(
            map_name="f",
            pattern=q,
            n=1,
            domain_size=0,
            image_size=0,
            codomain_size=1,
            notes=["strict case: Av_{1,1}(132) = 1 > Av_{1,2}(132) = 0"],
        )

    report = MapReport(map_name="f", pattern=q, n=n, claims_surjective=True)
    domain = avoiders_by_blocks(n, [q], 2, ceiling=ceiling)
    codomain = avoiders_by_blocks(n, [q], 1, ceiling=ceiling)
    _run_injection(report, q, domain, codomain, f_move_max)

    for w in codomain:
        if w.values[-1] != n:
            report.counterexamples.append(Counterexample(w, None, f"one-block avoider does not end in {n}"))
        back = h_move_last_left_of_rightmost_block(w)
        if f_move_max(back) != w:
            report.counterexamples.append(Counterexample(w, back, "f does not undo h"))

    report.counterexamples.sort(key=lambda c: c.input)
    logger.info(f"f over Av_{{{n},2}}(132): {report.summary()}")
    return report


def verify_left_inverse(n: int, ceiling: Optional[int] = None) -> MapReport:
    """
    h(g(p)) = p for every permutation of length n with exactly two skew
    blocks; no avoidance restriction.
    """
    if n < 2:
        raise PreconditionError(f"two skew blocks need n >= 2, got {n}")
    check_ceiling(n, ceiling)

    report = MapReport(map_name="h∘g", pattern=None, n=n)
    images: Set[Permutation] = set()
    for p in all_permutations(n):
        if block_count(p) != 2:
            continue
        report.domain_size += 1
        image = g_move_rightmost_big(p)
        images.add(image)
        if h_move_last_left_of_rightmost_block(image) != p:
            report.counterexamples.append(Counterexample(p, image, "h(g(p)) != p"))

    report.image_size = len(images)
    report.injective = report.image_size == report.domain_size
    logger.info(f"h∘g on two-block permutations: {report.summary()}")
    return report
