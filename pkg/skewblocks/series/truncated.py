"""
Exact truncated formal power series.

A TruncatedSeries knows c_0..c_N exactly and nothing beyond z^N. Binary
operations truncate to the smaller order of their operands; nothing is ever
padded with zeros it does not know to be zero.

Coefficients are Fractions. Every counting series is integral, but
evaluation at rational points and the reciprocal of a non-unit leading term
need rationals, and one number type keeps the arithmetic uniform.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from skewblocks.core.exceptions import SerializationError, SeriesError
from skewblocks.enumeration.models import CountTable

Number = Union[int, Fraction]


def _to_fraction(value: Union[Number, str]) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise SeriesError(f"not an exact rational number: {value!r}") from e


@dataclass(frozen=True)
class TruncatedSeries:
    """
    c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).

    Attributes:
        coefficients: c_0..c_N as exact rationals
    """
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = tuple(_to_fraction(c) for c in self.coefficients)
        if not coefficients:
            raise SeriesError("a truncated series needs at least c_0")
        object.__setattr__(self, "coefficients", coefficients)

    # ===== CONSTRUCTORS =====

    @classmethod
    def of(cls, *coefficients: Union[Number, str]) -> "TruncatedSeries":
        """TruncatedSeries.of(1, 1, 2, 5) -> 1 + z + 2z^2 + 5z^3 + O(z^4)"""
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_polynomial([1], order)

    @classmethod
    def from_polynomial(cls, coefficients: Iterable[Union[Number, str]], order: int) -> "TruncatedSeries":
        """
        Truncate an exactly known polynomial (ascending coefficients) at order.
        The zeros beyond its degree are known, so padding is exact here.
        """
        if order < 0:
            raise SeriesError(f"order must be nonnegative, got {order}")
        coeffs = [_to_fraction(c) for c in coefficients]
        coeffs = coeffs[:order + 1] + [Fraction(0)] * max(0, order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    # ===== ACCESS =====

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise SeriesError(f"coefficient z^{n} unknown at order {self.order}")
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[:order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    # ===== ARITHMETIC =====

    def _align(self, other: "TruncatedSeries") -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...], int]:
        order = min(self.order, other.order)
        return self.coefficients[:order + 1], other.coefficients[:order + 1], order

    def __add__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.from_polynomial([other], self.order)
        a, b, _ = self._align(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Number) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        scale = _to_fraction(other)
        return TruncatedSeries(tuple(c * scale for c in self.coefficients))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        return power(self, exponent)

    # ===== DISPLAY / SERIALIZATION =====

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            magnitude = abs(c)
            if n == 0:
                body = str(magnitude)
            else:
                monomial = "z" if n == 1 else f"z^{n}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))

        tail = f"O(z^{self.order + 1})"
        if not terms:
            return f"0 + {tail}"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"{text} + {tail}"

    def to_dict(self) -> Dict[str, Any]:
        """Coefficients as exact [numerator, denominator] pairs."""
        return {
            "order": self.order,
            "coefficients": [[c.numerator, c.denominator] for c in self.coefficients],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TruncatedSeries":
        try:
            coeffs = tuple(Fraction(int(num), int(den)) for num, den in data["coefficients"])
            order = int(data["order"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise SerializationError(f"not a truncated series: {e}") from e
        if len(coeffs) != order + 1:
            raise SerializationError(f"order {order} but {len(coeffs)} coefficients")
        return cls(coeffs)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise SerializationError(f"invalid JSON: {e}") from e


def parse_coefficients(text: str) -> TruncatedSeries:
    """'1,1,2,5' or '0,1/2,1' -> series of order len-1."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise SeriesError("no coefficients given")
    return TruncatedSeries(tuple(_to_fraction(t) for t in tokens))


# ============================================================================
# OPERATIONS
# ============================================================================

def parse_kind(text: str) -> Tuple[str, Optional[int]]:
    """'total' -> ('total', None); 'blocks:2' -> ('blocks', 2)"""
    text = text.strip().lower()
    if text == "total":
        return "total", None
    if text.startswith("blocks"):
        _, _, ell = text.partition(":")
        try:
            return "blocks", int(ell or "1")
        except ValueError:
            raise SeriesError(f"bad block index in {text!r}") from None
    raise SeriesError(f"unknown series kind {text!r} (use 'total' or 'blocks:<l>')")


def series_from_counts(table: CountTable, kind: str = "total", ell: Optional[int] = None) -> TruncatedSeries:
    """
    A_S(z) (kind='total') or A_{l,S}(z) (kind='blocks', ell=l) to order n_max.

    Examples (S={132}, n_max=5):
        total    -> 1 + z + 2z^2 + 5z^3 + 14z^4 + 42z^5
        blocks 1 -> z + z^2 + 2z^3 + 5z^4 + 14z^5
    """
    if kind == "total":
        return TruncatedSeries(tuple(table.total))
    if kind != "blocks":
        raise SeriesError(f"unknown series kind {kind!r}")
    if ell is None or ell < 1:
        raise SeriesError(f"block series needs ell >= 1, got {ell}")
    if ell > table.n_max:
        raise SeriesError(f"ell={ell} exceeds the table's n_max={table.n_max}")
    return TruncatedSeries(tuple(table.count(n, ell) if n else 0 for n in range(table.n_max + 1)))


def multiply(F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(order F, order G)."""
    a, b, order = F._align(G)
    out = []
    for n in range(order + 1):
        out.append(sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def power(F: TruncatedSeries, exponent: int) -> TruncatedSeries:
    """F^exponent by binary exponentiation; F^0 = 1."""
    if exponent < 0:
        raise SeriesError(f"negative exponent {exponent}; use reciprocal()")
    result = TruncatedSeries.one(F.order)
    base = F
    while exponent:
        if exponent & 1:
            result = multiply(result, base)
        exponent >>= 1
        if exponent:
            base = multiply(base, base)
    return result


def reciprocal(A: TruncatedSeries) -> TruncatedSeries:
    """
    1/A for c_0(A) = 1, by b_0 = 1, b_n = -(a_1 b_{n-1} + ... + a_n b_0).
    """
    if A[0] != 1:
        raise SeriesError(f"reciprocal needs c_0 = 1, got {A[0]}")
    b = [Fraction(1)]
    for n in range(1, A.order + 1):
        b.append(-sum((A[i] * b[n - i] for i in range(1, n + 1)), Fraction(0)))
    return TruncatedSeries(tuple(b))


def quasi_inverse(G: TruncatedSeries) -> TruncatedSeries:
    """
    F = 1/(1 - G) = sum of G^l, l >= 0, for c_0(G) = 0.

    Raises:
        SeriesError: c_0(G) != 0 (quasi-inverse undefined)
    """
    if G[0] != 0:
        raise SeriesError(f"quasi-inverse needs c_0 = 0, got {G[0]}")
    return reciprocal(1 - G)


def indecomposable_part(A: TruncatedSeries) -> TruncatedSeries:
    """
    1 - 1/A for c_0(A) = 1; inverts quasi_inverse.

    For a skew-indecomposable pattern this recovers the one-block series
    from the total series.
    """
    if A[0] != 1:
        raise SeriesError(f"indecomposable part needs c_0 = 1, got {A[0]}")
    return 1 - reciprocal(A)


@dataclass(frozen=True)
class Domination:
    """Outcome of a coefficientwise comparison; truthy when F dominates G."""
    holds: bool
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {"dominates": self.holds, "witness": self.witness}


def coefficient_dominates(F: TruncatedSeries, G: TruncatedSeries) -> Domination:
    """
    Check c_n(F) >= c_n(G) for every n <= N; otherwise report the smallest
    violating n.
    """
    if F.order != G.order:
        raise SeriesError(f"orders differ: {F.order} vs {G.order}")
    for n in range(F.order + 1):
        if F[n] < G[n]:
            return Domination(False, n)
    return Domination(True)


def eval_partial(G: TruncatedSeries, z0: Union[Number, str]) -> Fraction:
    """
    Exact value of the truncated polynomial at z0 > 0. For a nonnegative
    series this is a lower bound on G(z0).
    """
    z0 = _to_fraction(z0)
    if z0 <= 0:
        raise SeriesError(f"evaluation point must be positive, got {z0}")
    value = Fraction(0)
    for c in reversed(G.coefficients):
        value = value * z0 + c
    return value
