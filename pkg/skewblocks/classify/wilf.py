"""
Empirical Wilf classes: all patterns of one length grouped by their count
vectors (Av_1, ..., Av_N). Count vectors are computed one pattern per task
and collected in submission order.
"""

import logging
from typing import Dict, List, Optional, Tuple

from skewblocks.core.config import config
from skewblocks.core.exceptions import PreconditionError, ResourceGuardError
from skewblocks.core.worker_pool import WorkerPool
from skewblocks.classify.models import WilfClass, WilfClassification
from skewblocks.enumeration.engine import check_ceiling, count_vector
from skewblocks.perm.permutation import Permutation, all_permutations, symmetry_class

logger = logging.getLogger(__name__)


def _vector_task(values: Tuple[int, ...], depth: int) -> Tuple[int, ...]:
    # ceiling already applied in the parent
    return count_vector([Permutation(values)], depth, ceiling=depth)


def wilf_classes(
    k: int,
    depth: Optional[int] = None,
    ceiling: Optional[int] = None,
    workers: Optional[int] = None,
) -> WilfClassification:
    """
    Partition the k! patterns of length k by count vector to depth N.

    Examples:
        k=3, N=8 -> one class of 6 patterns (Catalan)
        k=2, N=4 -> {12, 21}

    Raises:
        PreconditionError: k < 2
        ResourceGuardError: k above config.PATTERN_LENGTH_CEILING or N above the n ceiling
    """
    depth = config.WILF_DEPTH if depth is None else depth
    if k < 2:
        raise PreconditionError(f"pattern length must be at least 2, got {k}")
    if k > config.PATTERN_LENGTH_CEILING:
        raise ResourceGuardError(
            f"k={k} exceeds the pattern length ceiling {config.PATTERN_LENGTH_CEILING}"
        )
    if depth < 1:
        raise PreconditionError(f"depth must be at least 1, got {depth}")
    check_ceiling(depth, ceiling)
    workers = config.resolve_workers(workers)

    patterns = list(all_permutations(k))
    logger.info(f"Grouping {len(patterns)} patterns of length {k} to n={depth} with {workers} worker(s)")
    with WorkerPool(workers) as pool:
        for q in patterns:
            pool.add_task(_vector_task, q.values, depth, name=f"Av({q})")
        vectors = pool.gather()

    groups: Dict[Tuple[int, ...], List[Permutation]] = {}
    for q, vector in zip(patterns, vectors):
        groups.setdefault(vector, []).append(q)

    classes = []
    for class_id, (vector, members) in enumerate(groups.items(), start=1):
        orbit = set(symmetry_class(members[0]))
        classes.append(
            WilfClass(
                class_id=class_id,
                patterns=tuple(members),
                counts=vector,
                symmetry_only=orbit == set(members),
            )
        )

    logger.info(f"Length {k}: {len(classes)} class(es) to n={depth}")
    return WilfClassification(k=k, depth=depth, classes=classes)
