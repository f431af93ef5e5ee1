"""
Supercriticality probes for F = 1/(1 - G).

The relation is supercritical when G exceeds 1 strictly inside its disc of
convergence. A probe only says "supercritical" on hard evidence: either an
exact point z0 below the radius with G(z0) > 1, or a genuine pole (G is
unbounded as z approaches it, so such a z0 exists and is found by
refinement). A truncation can witness G(z0) > 1 but can never rule it out;
non-supercriticality of a counting class is checked through the count bound
Av_n <= n * Av_{n,1} instead.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from skewblocks.core.config import config
from skewblocks.core.exceptions import NotACountingSeriesError, SeriesError
from skewblocks.enumeration.models import CountTable
from skewblocks.series.rational import RationalFunction
from skewblocks.series.truncated import TruncatedSeries, _to_fraction, eval_partial, multiply

logger = logging.getLogger(__name__)

# Refinement rounds before giving up on a witness below a located pole
MAX_WITNESS_ROUNDS = 64


class VerdictStatus(str, Enum):
    SUPERCRITICAL = "supercritical"
    NOT_SUPERCRITICAL = "not_supercritical"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SupercriticalVerdict:
    """
    Outcome of a supercriticality probe.

    Attributes:
        status: supercritical / not_supercritical / inconclusive
        witness: z0 with G(z0) > 1, below the radius of G (when found)
        value: G(z0), exact
        evidence: Which rule fired
        pole: Isolating interval of the smallest positive pole (rational G)
    """
    status: VerdictStatus
    evidence: str
    witness: Optional[Fraction] = None
    value: Optional[Fraction] = None
    pole: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def is_supercritical(self) -> bool:
        return self.status == VerdictStatus.SUPERCRITICAL

    def to_dict(self) -> Dict[str, Any]:
        def frac(x: Optional[Fraction]) -> Optional[str]:
            return None if x is None else str(x)

        return {
            "status": self.status.value,
            "evidence": self.evidence,
            "witness": frac(self.witness),
            "value": frac(self.value),
            "pole": None if self.pole is None else [str(self.pole[0]), str(self.pole[1])],
        }


def _check_counting_series(G: RationalFunction, check_order: int) -> None:
    expansion = G.series(check_order)
    if expansion[0] != 0:
        raise SeriesError(f"G(0) must be 0, got {expansion[0]}")
    for n, c in enumerate(expansion.coefficients):
        if c < 0:
            raise NotACountingSeriesError(f"not a counting series: coefficient of z^{n} is {c}")


def _polynomial_witness(G: RationalFunction) -> Tuple[Fraction, Fraction]:
    z0 = Fraction(1)
    while True:
        value = G.evaluate(z0)
        if value > 1:
            return z0, value
        z0 *= 2


def rational_supercritical(
    G: RationalFunction,
    check_order: Optional[int] = None,
    width: Optional[Fraction] = None,
) -> SupercriticalVerdict:
    """
    Decide supercriticality of 1/(1 - G) for a rational counting series G.

    Args:
        G: Rational function with G(0) = 0 and nonnegative Maclaurin coefficients
        check_order: How far the nonnegativity check looks (default config)
        width: Root isolation width (default config.ROOT_WIDTH)

    Returns:
        SupercriticalVerdict; polynomials and genuine poles give supercritical,
        no positive pole gives inconclusive

    Raises:
        SeriesError: G(0) != 0
        NotACountingSeriesError: a negative coefficient up to check_order, or
            anywhere in a polynomial G
    """
    check_order = config.COEFFICIENT_CHECK_ORDER if check_order is None else check_order
    width = config.ROOT_WIDTH if width is None else width
    _check_counting_series(G, check_order)

    if G.is_polynomial():
        # every coefficient is known exactly, not only those up to check_order
        for n, c in enumerate(G.numerator):
            if c < 0:
                raise NotACountingSeriesError(f"not a counting series: coefficient of z^{n} is {c}")
        if all(c == 0 for c in G.numerator):
            return SupercriticalVerdict(
                status=VerdictStatus.NOT_SUPERCRITICAL,
                evidence="G is identically zero, so G never exceeds 1",
            )
        z0, value = _polynomial_witness(G)
        return SupercriticalVerdict(
            status=VerdictStatus.SUPERCRITICAL,
            evidence="polynomial, R_G infinite",
            witness=z0,
            value=value,
        )

    pole = G.smallest_positive_pole(width)
    if pole is None:
        logger.info(f"No positive denominator root for {G}; verdict inconclusive")
        return SupercriticalVerdict(
            status=VerdictStatus.INCONCLUSIVE,
            evidence="non-polynomial with no positive real denominator root",
        )

    # Approach the pole from below until G passes 1
    low, high = pole
    for k in range(1, MAX_WITNESS_ROUNDS + 1):
        if low == high:
            z0 = low * (1 - Fraction(1, 2 ** k))
        else:
            low, high = G.refine_pole((low, high), (high - low) / 2)
            z0 = low if low < high else low * (1 - Fraction(1, 2 ** k))
        value = G.evaluate(z0)
        if value > 1:
            return SupercriticalVerdict(
                status=VerdictStatus.SUPERCRITICAL,
                evidence=f"pole at {_interval_text(pole)}",
                witness=z0,
                value=value,
                pole=pole,
            )

    logger.warning(f"Pole of {G} located but no witness after {MAX_WITNESS_ROUNDS} rounds")
    return SupercriticalVerdict(
        status=VerdictStatus.SUPERCRITICAL,
        evidence=f"pole at {_interval_text(pole)} (witness not refined)",
        pole=pole,
    )


def _interval_text(interval: Tuple[Fraction, Fraction]) -> str:
    a, b = interval
    return str(a) if a == b else f"[{a}, {b}]"


def truncated_supercritical(G: TruncatedSeries, z0: Union[Fraction, int, str]) -> SupercriticalVerdict:
    """
    Probe a truncated nonnegative series at z0: a partial sum above 1 is a
    witness, anything else is inconclusive. Never returns not_supercritical.
    """
    if G[0] != 0:
        raise SeriesError(f"G(0) must be 0, got {G[0]}")
    if not G.is_nonnegative():
        raise NotACountingSeriesError("not a counting series: negative coefficient")
    z0 = _to_fraction(z0)
    value = eval_partial(G, z0)
    if value > 1:
        return SupercriticalVerdict(
            status=VerdictStatus.SUPERCRITICAL,
            evidence=f"partial sum to order {G.order} exceeds 1 at z0",
            witness=z0,
            value=value,
        )
    return SupercriticalVerdict(
        status=VerdictStatus.INCONCLUSIVE,
        evidence=f"partial sum to order {G.order} is {value} <= 1 at z0; truncation cannot decide",
        value=value,
    )


def sequence_bound_violations(table: CountTable) -> List[int]:
    """
    Lengths n with Av_n > n * Av_{n,1}.

    Monotone decrease in the block index gives Av_n <= n * Av_{n,1}, so an
    empty list is what a monotone class must produce. Equality does not hold
    in general (Av_4(132) = 14 < 20).
    """
    return [n for n in range(1, table.n_max + 1) if table.total[n] > n * table.count(n, 1)]


def square_exceeds(G: TruncatedSeries) -> Optional[int]:
    """Smallest n with [z^n] G^2 > [z^n] G, or None up to the order of G."""
    square = multiply(G, G)
    for n in range(G.order + 1):
        if square[n] > G[n]:
            return n
    return None
