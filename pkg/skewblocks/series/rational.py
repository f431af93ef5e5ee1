"""
Rational power series N(z)/D(z) over the rationals.

sympy does the polynomial algebra: cancellation to lowest terms and exact
isolation of the real roots of the denominator. Coefficients cross the
boundary as Fractions, so callers never see sympy objects.

Usage:
    from skewblocks.series import RationalFunction

    G = RationalFunction.from_text("0,1", "1,-1")      # z/(1-z)
    G.series(5)                                         # z + z^2 + ... + z^5
    G.smallest_positive_pole()                          # (1, 1)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from sympy import QQ, Poly, Rational, Symbol

from skewblocks.core.exceptions import SeriesError
from skewblocks.series.truncated import TruncatedSeries, _to_fraction, multiply, reciprocal

logger = logging.getLogger(__name__)

_Z = Symbol("z")

Interval = Tuple[Fraction, Fraction]


def _to_poly(coefficients: Sequence[Fraction]) -> Poly:
    """Ascending Fractions -> sympy Poly in z over QQ."""
    return Poly([Rational(c.numerator, c.denominator) for c in reversed(coefficients)], _Z, domain=QQ)


def _from_poly(poly: Poly) -> Tuple[Fraction, ...]:
    """sympy Poly -> ascending Fractions, trailing zeros stripped, (0,) for zero."""
    if poly.is_zero:
        return (Fraction(0),)
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))


def _sympy_to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _strip(coefficients: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    coeffs = list(coefficients)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) or (Fraction(0),)


@dataclass(frozen=True)
class RationalFunction:
    """
    numerator/denominator in lowest terms, denominator constant term 1.

    Attributes:
        numerator: Ascending coefficients of N(z)
        denominator: Ascending coefficients of D(z), D(0) = 1
    """
    numerator: Tuple[Fraction, ...]
    denominator: Tuple[Fraction, ...]

    def __post_init__(self):
        num = _strip(_to_fraction(c) for c in self.numerator)
        den = _strip(_to_fraction(c) for c in self.denominator)
        if all(c == 0 for c in den):
            raise SeriesError("denominator is the zero polynomial")

        num_poly, den_poly = _to_poly(num), _to_poly(den)
        common = num_poly.gcd(den_poly)
        if not num_poly.is_zero and common.degree() > 0:
            num_poly = num_poly.exquo(common)
            den_poly = den_poly.exquo(common)
        elif num_poly.is_zero:
            den_poly = Poly(1, _Z, domain=QQ)

        num, den = _from_poly(num_poly), _from_poly(den_poly)
        constant = den[0]
        if constant == 0:
            raise SeriesError("denominator(0) = 0 after cancellation; not a power series")
        object.__setattr__(self, "numerator", tuple(c / constant for c in num))
        object.__setattr__(self, "denominator", tuple(c / constant for c in den))

    @classmethod
    def from_text(cls, numerator: str, denominator: str = "1") -> "RationalFunction":
        """Comma-separated ascending coefficients, e.g. '0,1' and '1,-1' for z/(1-z)."""
        def parse(text: str) -> Tuple[Fraction, ...]:
            tokens = [t.strip() for t in text.split(",") if t.strip()]
            if not tokens:
                raise SeriesError(f"no coefficients in {text!r}")
            return tuple(_to_fraction(t) for t in tokens)

        return cls(parse(numerator), parse(denominator))

    def is_polynomial(self) -> bool:
        return self.denominator == (Fraction(1),)

    def evaluate(self, z: Fraction) -> Fraction:
        z = _to_fraction(z)
        den = _horner(self.denominator, z)
        if den == 0:
            raise SeriesError(f"pole at z={z}")
        return _horner(self.numerator, z) / den

    def series(self, order: int) -> TruncatedSeries:
        """Maclaurin expansion to z^order."""
        num = TruncatedSeries.from_polynomial(self.numerator, order)
        den = TruncatedSeries.from_polynomial(self.denominator, order)
        return multiply(num, reciprocal(den))

    def smallest_positive_pole(self, width: Fraction) -> Optional[Interval]:
        """
        Isolating interval (a, b), 0 < a <= b, b - a < width, around the
        smallest positive root of the denominator; None when there is none.
        An exactly rational root comes back as (r, r).
        """
        if self.is_polynomial():
            return None
        den_poly = _to_poly(self.denominator)
        eps = Rational(width.numerator, width.denominator)

        best: Optional[Interval] = None
        for (a, b), _ in den_poly.intervals(eps=eps):
            if b <= 0:
                continue
            # D(0) = 1, so refinement eventually pulls the interval off 0
            while a <= 0:
                a, b = den_poly.refine_root(a, b, eps=(b - a) / 2)
            candidate = (_sympy_to_fraction(a), _sympy_to_fraction(b))
            if best is None or candidate[0] < best[0]:
                best = candidate

        logger.debug(f"Smallest positive pole of {self}: {best}")
        return best

    def refine_pole(self, interval: Interval, width: Fraction) -> Interval:
        """Shrink an isolating interval from smallest_positive_pole()."""
        a, b = interval
        if a == b:
            return interval
        den_poly = _to_poly(self.denominator)
        ra, rb = den_poly.refine_root(
            Rational(a.numerator, a.denominator),
            Rational(b.numerator, b.denominator),
            eps=Rational(width.numerator, width.denominator),
        )
        return _sympy_to_fraction(ra), _sympy_to_fraction(rb)

    def __str__(self) -> str:
        num = _poly_text(self.numerator)
        if self.is_polynomial():
            return num
        return f"({num})/({_poly_text(self.denominator)})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "numerator": [[c.numerator, c.denominator] for c in self.numerator],
            "denominator": [[c.numerator, c.denominator] for c in self.denominator],
        }


def _horner(coefficients: Sequence[Fraction], z: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coefficients):
        value = value * z + c
    return value


def _poly_text(coefficients: Sequence[Fraction]) -> str:
    terms = []
    for n, c in enumerate(coefficients):
        if c == 0:
            continue
        monomial = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
        magnitude = abs(c)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text
