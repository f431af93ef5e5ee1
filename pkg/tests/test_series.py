"""
Tests for exact truncated series: arithmetic, the quasi-inverse relation
between total and one-block series, and the power rule.
"""

import random
from fractions import Fraction

import pytest

from skewblocks.core.exceptions import SerializationError, SeriesError
from skewblocks.enumeration import count_by_blocks
from skewblocks.series import (
    TruncatedSeries,
    coefficient_dominates,
    eval_partial,
    indecomposable_part,
    multiply,
    parse_coefficients,
    parse_kind,
    power,
    quasi_inverse,
    reciprocal,
    series_from_counts,
)

S = TruncatedSeries.of


class TestBasics:
    def test_display(self):
        assert str(S(1, 1, 2)) == "1 + z + 2*z^2 + O(z^3)"
        assert str(TruncatedSeries.zero(2)) == "0 + O(z^3)"
        assert str(S(0, -1, Fraction(1, 2))) == "-z + 1/2*z^2 + O(z^3)"

    def test_operations_truncate_to_smaller_order(self):
        total = S(1, 1, 1) + S(1, 2)
        assert total.order == 1
        assert total.coefficients == (2, 3)
        assert (S(1, 1, 1) * S(1, 1)).order == 1

    def test_unknown_coefficient_raises(self):
        with pytest.raises(SeriesError):
            S(1, 1)[2]

    def test_cannot_extend(self):
        with pytest.raises(SeriesError):
            S(1, 1).truncate(3)

    def test_scalar_arithmetic(self):
        assert (1 - S(0, 1, 1)).coefficients == (1, -1, -1)
        assert (2 * S(1, 3)).coefficients == (2, 6)

    def test_parse_coefficients(self):
        assert parse_coefficients("0,1/2,1").coefficients == (0, Fraction(1, 2), 1)
        with pytest.raises(SeriesError):
            parse_coefficients("")
        with pytest.raises(SeriesError):
            parse_coefficients("1,x")

    def test_parse_kind(self):
        assert parse_kind("total") == ("total", None)
        assert parse_kind("blocks:2") == ("blocks", 2)
        assert parse_kind("blocks") == ("blocks", 1)
        with pytest.raises(SeriesError):
            parse_kind("length")
        with pytest.raises(SeriesError):
            parse_kind("blocks:x")

    def test_exact_pairs_in_dict(self):
        data = S(0, Fraction(1, 3)).to_dict()
        assert data == {"order": 1, "coefficients": [[0, 1], [1, 3]]}
        assert TruncatedSeries.from_dict(data) == S(0, Fraction(1, 3))

    def test_dict_order_mismatch_rejected(self):
        with pytest.raises(SerializationError):
            TruncatedSeries.from_dict({"order": 3, "coefficients": [[1, 1]]})


class TestProducts:
    def test_cauchy_product(self):
        assert multiply(S(1, 1, 0, 0), S(1, 1, 0, 0)).coefficients == (1, 2, 1, 0)

    def test_power_zero_is_one(self):
        assert power(S(0, 1, 1), 0) == TruncatedSeries.one(2)

    def test_power_matches_repeated_product(self):
        F = S(0, 1, 1, 2, 5, 14)
        assert power(F, 3) == multiply(multiply(F, F), F)

    def test_negative_exponent_rejected(self):
        with pytest.raises(SeriesError):
            power(S(1, 1), -1)

    def test_geometric_reciprocal(self):
        assert reciprocal(TruncatedSeries.from_polynomial([1, -1], 5)).coefficients == (1,) * 6

    def test_reciprocal_needs_unit(self):
        with pytest.raises(SeriesError):
            reciprocal(S(2, 1))

    def test_quasi_inverse_needs_zero_constant(self):
        with pytest.raises(SeriesError):
            quasi_inverse(S(1, 1))

    def test_indecomposable_part_needs_unit(self):
        with pytest.raises(SeriesError):
            indecomposable_part(S(0, 1))


class TestFromCounts:
    def test_132_series(self):
        total = series_from_counts(count_by_blocks(5, "132", workers=1))
        assert total.coefficients == (1, 1, 2, 5, 14, 42)

    def test_one_block_series_of_132(self, table_132):
        G = series_from_counts(table_132, "blocks", 1)
        assert G.coefficients[:6] == (0, 1, 1, 2, 5, 14)

    def test_block_index_bounds(self, table_132):
        with pytest.raises(SeriesError):
            series_from_counts(table_132, "blocks", 0)
        with pytest.raises(SeriesError):
            series_from_counts(table_132, "blocks", 11)

    def test_quasi_inverse_recovers_total(self, table_132):
        G = series_from_counts(table_132, "blocks", 1)
        assert quasi_inverse(G) == series_from_counts(table_132, "total")

    def test_indecomposable_part_recovers_one_block(self, table_132):
        A = series_from_counts(table_132, "total")
        assert indecomposable_part(A) == series_from_counts(table_132, "blocks", 1)

    def test_quasi_inverse_round_trip(self):
        G = S(0, 1, 3, 0, 7)
        assert indecomposable_part(quasi_inverse(G)) == G

    @pytest.mark.parametrize("pattern", ["132", "3142", "2143", "2413"])
    def test_power_rule(self, pattern):
        table = count_by_blocks(8, pattern, workers=1)
        G = series_from_counts(table, "blocks", 1)
        for ell in range(1, 9):
            assert series_from_counts(table, "blocks", ell) == power(G, ell)


class TestComparison:
    def test_domination_witness(self):
        result = coefficient_dominates(S(1, 2, 3), S(1, 2, 4))
        assert not result
        assert result.witness == 2
        assert coefficient_dominates(S(1, 2, 4), S(1, 2, 3))

    def test_domination_needs_equal_orders(self):
        with pytest.raises(SeriesError):
            coefficient_dominates(S(1, 2), S(1, 2, 3))

    def test_eval_partial(self):
        assert eval_partial(S(0, 1, 1), Fraction(1, 2)) == Fraction(3, 4)
        with pytest.raises(SeriesError):
            eval_partial(S(0, 1), 0)


@pytest.mark.parametrize("pattern", ["123", "132", "213"])
def test_total_and_one_block_series_determine_each_other(pattern):
    table = count_by_blocks(10, pattern, workers=1)
    A = series_from_counts(table, "total")
    G = series_from_counts(table, "blocks", 1)
    assert indecomposable_part(A) == G
    assert quasi_inverse(G) == A


def test_identity_fails_for_decomposable_pattern():
    # 21-avoiders are the identities: one block each, but 1/(1 - G) counts compositions
    table = count_by_blocks(5, "21", workers=1)
    G = series_from_counts(table, "blocks", 1)
    assert quasi_inverse(G) != series_from_counts(table, "total")


# ============================================================================
# RANDOM SERIES
# ============================================================================

def _random_series(rng: random.Random, order: int, constant: int) -> TruncatedSeries:
    tail = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order)]
    return TruncatedSeries((Fraction(constant), *tail))


def test_quasi_inverse_identity_on_random_series():
    rng = random.Random(2024)
    for _ in range(50):
        G = _random_series(rng, 30, 0)
        F = quasi_inverse(G)
        assert multiply(1 - G, F) == TruncatedSeries.one(30)


def test_indecomposable_part_round_trip_on_random_series():
    rng = random.Random(7)
    for _ in range(50):
        A = _random_series(rng, 30, 1)
        assert quasi_inverse(indecomposable_part(A)) == A


def test_eval_partial_grows_with_order(table_132):
    G = series_from_counts(table_132, "blocks", 1)
    for z0 in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), 2):
        values = [eval_partial(G.truncate(N), z0) for N in range(G.order + 1)]
        assert values == sorted(values)


def test_eval_partial_grows_with_order_on_random_series():
    rng = random.Random(11)
    for _ in range(20):
        G = TruncatedSeries(tuple(Fraction(rng.randint(0, 9)) for _ in range(21)))
        values = [eval_partial(G.truncate(N), Fraction(1, 3)) for N in range(21)]
        assert all(a <= b for a, b in zip(values, values[1:]))
