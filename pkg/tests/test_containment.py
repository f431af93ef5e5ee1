"""
Tests for pattern containment: the pruned search against the
all-subsequences oracle.
"""

import pytest

from skewblocks.perm import (
    all_permutations,
    avoids,
    complement,
    contains,
    contains_naive,
    find_occurrence,
    parse_permutation,
    reverse,
    standardize,
)

P = parse_permutation


def test_worked_example():
    p, q = P("3752416"), P("2413")
    assert contains(p, q)
    positions = find_occurrence(p, q)
    assert len(positions) == 4
    assert standardize([p[i - 1] for i in positions]) == q


def test_occurrence_empty_when_avoided():
    assert find_occurrence(P("123"), P("21")) == ()


def test_empty_pattern_always_contained():
    assert contains(P("21"), P(""))
    assert contains(P(""), P(""))


def test_longer_pattern_never_contained():
    assert not contains(P("12"), P("123"))


def test_every_permutation_contains_itself():
    for p in all_permutations(5):
        assert contains(p, p)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_search_matches_oracle(k):
    patterns = list(all_permutations(k))
    for n in range(0, 7):
        for p in all_permutations(n):
            for q in patterns:
                assert contains(p, q) == contains_naive(p, q), f"{p} vs {q}"


def test_avoids_is_negation():
    assert avoids(P("231"), P("132"))
    assert not avoids(P("1432"), P("132"))


@pytest.mark.parametrize("k", [3, 4])
def test_containment_respects_symmetries(k):
    patterns = list(all_permutations(k))
    for n in range(k, 7):
        for p in all_permutations(n):
            for q in patterns:
                expected = contains(p, q)
                assert contains(reverse(p), reverse(q)) == expected
                assert contains(complement(p), complement(q)) == expected
