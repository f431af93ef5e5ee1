"""
Tests for the Permutation type, its text formats, symmetries and skew blocks.
"""

import pytest

from skewblocks.core.exceptions import InvalidPermutationError, PreconditionError
from skewblocks.perm import (
    Permutation,
    all_permutations,
    block_count,
    complement,
    is_good,
    is_skew_indecomposable,
    parse_pattern_list,
    parse_permutation,
    reverse,
    skew_decompose,
    skew_sum,
    standardize,
    symmetry_class,
)

P = parse_permutation


class TestParsing:
    def test_compact_digits(self):
        assert P("132").values == (1, 3, 2)

    def test_comma_format_and_round_trip(self):
        p = P("10,2,3,4,5,6,7,8,9,1")
        assert len(p) == 10
        assert str(p) == "10,2,3,4,5,6,7,8,9,1"
        assert P(str(p)) == p

    def test_compact_round_trip(self):
        for p in all_permutations(5):
            assert P(str(p)) == p

    def test_empty_text_is_empty_permutation(self):
        assert len(P("")) == 0

    @pytest.mark.parametrize("text", ["1x2", "122", "13", "0,1", "1,-2"])
    def test_malformed_input_rejected(self, text):
        with pytest.raises(InvalidPermutationError):
            P(text)

    def test_error_names_offending_token(self):
        with pytest.raises(InvalidPermutationError, match="'x'"):
            P("1x2")

    def test_pattern_list_formats(self):
        assert parse_pattern_list("123,132") == [P("123"), P("132")]
        assert parse_pattern_list("123 132") == [P("123"), P("132")]
        assert parse_pattern_list("123;132") == [P("123"), P("132")]
        assert parse_pattern_list("132") == [P("132")]
        assert parse_pattern_list("10,2,3,4,5,6,7,8,9,1") == [P("10,2,3,4,5,6,7,8,9,1")]

    def test_pattern_list_mixes_lengths(self):
        assert parse_pattern_list("132,1") == [P("132"), P("1")]
        assert parse_pattern_list("21,1") == [P("21"), P("1")]
        assert parse_pattern_list("2,1") == [P("21")]
        assert parse_pattern_list("1,2 132") == [P("12"), P("132")]
        with pytest.raises(InvalidPermutationError):
            parse_pattern_list("132,122")


class TestSymmetries:
    def test_reverse_and_complement(self):
        assert reverse(P("132")) == P("231")
        assert complement(P("132")) == P("312")
        assert reverse(P("25143")) == P("34152")
        assert complement(P("25143")) == P("41523")

    def test_involutions(self):
        for q in all_permutations(4):
            assert reverse(reverse(q)) == q
            assert complement(complement(q)) == q

    def test_symmetry_class_of_132(self):
        assert symmetry_class(P("132")) == (P("132"), P("213"), P("231"), P("312"))

    def test_standardize(self):
        assert standardize([5, 2, 9]) == P("213")
        assert standardize([40, 10, 30, 20]) == P("4132")

    def test_all_permutations_lexicographic(self):
        assert [str(p) for p in all_permutations(3)] == ["123", "132", "213", "231", "312", "321"]


class TestSkewDecomposition:
    def test_two_blocks(self):
        d = skew_decompose(P("346512"))
        assert [str(b) for b in d.blocks] == ["1243", "12"]
        assert d.offsets == (2, 0)

    def test_four_blocks(self):
        d = skew_decompose(P("6743521"))
        assert [str(b) for b in d.blocks] == ["12", "213", "1", "1"]
        assert len(d) == 4

    def test_identity_is_one_block(self):
        assert block_count(Permutation.identity(5)) == 1

    def test_decreasing_has_n_blocks(self):
        assert block_count(P("4321")) == 4

    def test_empty_permutation_rejected(self):
        with pytest.raises(PreconditionError):
            skew_decompose(P(""))
        with pytest.raises(PreconditionError):
            block_count(P(""))

    def test_blocks_are_indecomposable_and_reassemble(self):
        for n in range(1, 7):
            for p in all_permutations(n):
                d = skew_decompose(p)
                assert all(is_skew_indecomposable(b) for b in d.blocks)
                assert d.reassemble() == p
                assert skew_sum(d.blocks) == p

    def test_pattern_or_its_reverse_is_indecomposable(self):
        for n in range(1, 8):
            for q in all_permutations(n):
                assert is_skew_indecomposable(q) or is_skew_indecomposable(reverse(q)), str(q)

    def test_skew_sum(self):
        assert skew_sum([P("12")]) == P("12")
        assert skew_sum([P("12"), P("1")]) == P("231")
        assert skew_sum([P("1"), P("1"), P("1")]) == P("321")

    def test_skew_sum_rejects_empty_block(self):
        with pytest.raises(PreconditionError):
            skew_sum([P("1"), P("")])


class TestGoodPatterns:
    @pytest.mark.parametrize("text", ["132", "3142", "2143"])
    def test_good(self, text):
        assert is_good(P(text))

    @pytest.mark.parametrize("text", ["1324", "35124"])
    def test_not_good(self, text):
        assert not is_good(P(text))

    def test_ending_in_maximum_is_never_good(self):
        for k in range(2, 7):
            for q in all_permutations(k):
                if q.values[-1] == k:
                    assert not is_good(q)

    def test_empty_pattern_rejected(self):
        with pytest.raises(PreconditionError):
            is_good(P(""))
