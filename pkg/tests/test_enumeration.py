"""
Tests for the pruned enumerator and the block-count tables it fills.

Reference values are the Catalan numbers for 132, the powers of two for
{123, 132}, and the classical length-4 counts.
"""

import pytest

from skewblocks.core.config import SkewBlocksConfig
from skewblocks.core.exceptions import PreconditionError, ResourceGuardError
from skewblocks.enumeration import (
    PatternSet,
    avoiders_by_blocks,
    count_avoiders,
    count_by_blocks,
    count_vector,
    enumerate_avoiders,
)
from skewblocks.perm import (
    all_permutations,
    block_count,
    complement,
    parse_permutation,
    reverse,
)

P = parse_permutation

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


# ============================================================================
# TOTALS
# ============================================================================

def test_catalan_totals(table_132):
    assert table_132.total == CATALAN


@pytest.mark.parametrize("n, row", [
    (1, [1]),
    (2, [1, 1]),
    (3, [2, 2, 1]),
    (4, [5, 5, 3, 1]),
    (5, [14, 14, 9, 4, 1]),
])
def test_132_block_rows(table_132, n, row):
    assert table_132.by_blocks[n] == row


def test_123_132_closed_forms(table_123_132):
    for n in range(1, table_123_132.n_max + 1):
        assert table_123_132.total[n] == 2 ** (n - 1)
        assert table_123_132.count(n, 1) == 1
        if n >= 2:
            assert table_123_132.count(n, 2) == n - 1


def test_length_four_classics():
    assert count_avoiders(6, "1342", workers=1) == 512
    assert count_avoiders(6, "1234", workers=1) == 513


@pytest.mark.slow
def test_length_four_at_seven():
    assert count_avoiders(7, "1234", workers=1) == 2761
    assert count_avoiders(7, "1324", workers=1) == 2762


def test_length_zero_has_one_avoider():
    assert count_avoiders(0, "132") == 1
    assert list(enumerate_avoiders(0, "132")) == [P("")]


def test_tables_are_consistent(table_132, table_123_132):
    assert table_132.check_invariants() == []
    assert table_123_132.check_invariants() == []


def test_count_vector():
    assert count_vector("132", 6) == (1, 2, 5, 14, 42, 132)


# ============================================================================
# AGAINST THE ORACLE
# ============================================================================

@pytest.mark.parametrize("patterns", [["132"], ["123", "132"], ["2413"], ["1324"], ["321", "2143"]])
def test_avoiders_match_oracle(naive_avoiders, patterns):
    for n in range(0, 7):
        expected = naive_avoiders(n, patterns)
        assert list(enumerate_avoiders(n, patterns)) == expected


@pytest.mark.parametrize("patterns", [["132"], ["2413"], ["123", "132"]])
def test_block_counts_match_oracle(naive_avoiders, patterns):
    table = count_by_blocks(6, patterns, workers=1)
    for n in range(1, 7):
        avoiders = naive_avoiders(n, patterns)
        for ell in range(1, n + 1):
            assert table.count(n, ell) == sum(1 for p in avoiders if block_count(p) == ell)


def test_avoiders_by_blocks():
    assert avoiders_by_blocks(3, "132", 2) == [P("231"), P("312")]
    assert avoiders_by_blocks(4, "132", 4) == [P("4321")]
    assert avoiders_by_blocks(3, "132", 5) == []


def test_stream_can_be_restarted():
    stream = enumerate_avoiders(5, "132")
    first = list(stream)
    assert len(first) == 42
    assert list(stream) == first


# ============================================================================
# SYMMETRY AND DETERMINISM
# ============================================================================

def test_totals_invariant_under_symmetries():
    for q in all_permutations(4):
        expected = count_vector(q, 6)
        assert count_vector(reverse(q), 6) == expected
        assert count_vector(complement(q), 6) == expected


def test_block_rows_invariant_under_reverse_complement():
    # rotating by 180 degrees reverses the block order and keeps the block count
    for q in all_permutations(4):
        a = count_by_blocks(6, q, workers=1)
        b = count_by_blocks(6, reverse(complement(q)), workers=1)
        assert a.by_blocks == b.by_blocks


def test_worker_count_does_not_change_the_table():
    one = count_by_blocks(9, ["123", "132"], workers=1)
    two = count_by_blocks(9, ["123", "132"], workers=2)
    assert one.to_dict() == two.to_dict()


@pytest.mark.slow
def test_parallel_counts_length_four():
    assert count_avoiders(9, "1342", workers=2) == count_avoiders(9, "1342", workers=1)


# ============================================================================
# GUARDS AND PATTERN SETS
# ============================================================================

def test_ceiling_argument_refuses():
    with pytest.raises(ResourceGuardError):
        count_avoiders(5, "132", ceiling=4)
    with pytest.raises(ResourceGuardError):
        enumerate_avoiders(5, "132", ceiling=4)


def test_configured_ceiling_refuses(monkeypatch):
    monkeypatch.setattr(SkewBlocksConfig, "N_CEILING", 3)
    with pytest.raises(ResourceGuardError, match="ceiling 3"):
        count_by_blocks(4, "132")


def test_negative_length_rejected():
    with pytest.raises(PreconditionError):
        count_avoiders(-1, "132")


def test_pattern_set_normalization():
    assert PatternSet.of("123", "1234").patterns == (P("123"),)
    assert PatternSet.of("132", "132").patterns == (P("132"),)
    assert str(PatternSet.of("132", "123")) == "{123, 132}"


def test_pattern_set_rejects_empty():
    with pytest.raises(PreconditionError):
        PatternSet(())
    with pytest.raises(PreconditionError):
        PatternSet.of("")


def test_count_is_zero_outside_range(table_132):
    assert table_132.count(3, 4) == 0
    assert table_132.count(3, 0) == 0
    assert table_132.row(2) == [1, 1] + [0] * 8
    with pytest.raises(PreconditionError):
        table_132.count(11, 1)


@pytest.mark.slow
def test_symmetry_invariance_to_eight():
    for k in range(1, 5):
        for q in all_permutations(k):
            expected = count_vector(q, 8)
            assert count_vector(reverse(q), 8) == expected
            assert count_vector(complement(q), 8) == expected
