"""
Tests for theorem applicability, monotonicity scans and empirical Wilf classes.
"""

import pytest

from skewblocks.core.exceptions import PreconditionError, ResourceGuardError
from skewblocks.classify import (
    Condition,
    KnownEquivalenceTable,
    MonotonicityViolation,
    applicability_for_length,
    block_table_mismatches,
    check_monotonicity,
    good_symmetric_form,
    skew_indecomposable_form,
    syntactic_condition,
    table_violations,
    theorem_applicability,
    wilf_classes,
)
from skewblocks.enumeration import count_by_blocks
from skewblocks.perm import all_permutations, parse_permutation, reverse
from skewblocks.series import sequence_bound_violations

P = parse_permutation


# ============================================================================
# APPLICABILITY
# ============================================================================

class TestApplicability:
    def test_syntactic_conditions(self):
        assert syntactic_condition(P("3142")) == Condition.FIRST_ENTRY_NOT_1
        assert syntactic_condition(P("1342")) == Condition.LAST_ENTRY_NOT_K
        assert syntactic_condition(P("1234")) is None

    def test_first_entry_route(self):
        report = theorem_applicability(P("3142"), depth=6)
        assert report.condition == Condition.FIRST_ENTRY_NOT_1
        assert report.evidence == "syntactic"
        assert report.good_form == P("3142")
        assert report.covered

    def test_monotone_pattern_via_known_table(self):
        report = theorem_applicability(P("1234"), depth=6)
        assert report.condition == Condition.WILF_EQUIVALENT_TO_COVERED
        assert report.witness == P("1243")
        assert report.evidence == "known table"
        assert report.good_form == P("1243")

    def test_empirical_witness_without_table(self):
        table = KnownEquivalenceTable(include_monotone=False)
        report = theorem_applicability(P("1234"), depth=6, table=table)
        assert report.witness == P("1243")
        assert report.evidence == "empirical to n = 6"

    def test_1324_not_covered(self):
        report = theorem_applicability(P("1324"), depth=7)
        assert report.condition == Condition.NOT_COVERED
        assert not report.covered
        assert report.witness is None
        assert len(report.observations) == 1

    def test_decomposable_pattern_uses_reverse(self):
        report = theorem_applicability(P("4231"), depth=7)
        assert report.skew_indecomposable_form == P("1324")
        assert report.condition == Condition.NOT_COVERED

    @pytest.mark.parametrize("k", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
    def test_reverse_reaches_same_coverage(self, k):
        for q in all_permutations(k):
            forward = theorem_applicability(q, depth=6)
            backward = theorem_applicability(reverse(q), depth=6)
            assert forward.covered == backward.covered, str(q)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            theorem_applicability(P("1"), depth=4)
        with pytest.raises(PreconditionError):
            theorem_applicability(P("1234"), depth=3)
        with pytest.raises(ResourceGuardError):
            theorem_applicability(P("1234"), depth=8, ceiling=7)

    def test_every_length_three_pattern_covered(self):
        reports = applicability_for_length(3, depth=5)
        assert [str(r.pattern) for r in reports] == ["123", "132", "213", "231", "312", "321"]
        assert all(r.covered for r in reports)
        assert reports[0].witness == P("132")

    def test_forms(self):
        assert skew_indecomposable_form(P("4231")) == P("1324")
        assert skew_indecomposable_form(P("3142")) == P("3142")
        assert good_symmetric_form(P("1324")) is None
        assert good_symmetric_form(P("1342")) is not None

    def test_known_table_validates_witness(self):
        table = KnownEquivalenceTable.builtin()
        assert len(table) == 1
        with pytest.raises(PreconditionError):
            table.extend(P("1234"), P("1324"))
        with pytest.raises(PreconditionError):
            table.extend(P("1234"), P("132"))
        table.extend(P("1324"), P("2413"), source="test")
        assert table.lookup(P("1324")) == (P("2413"), "test")
        assert len(table) == 2

    def test_report_dict(self):
        data = theorem_applicability(P("1234"), depth=6).to_dict()
        assert data["condition"] == "wilf_equivalent_to_covered"
        assert data["witness"] == "1243"
        assert data["covered"] is True


# ============================================================================
# MONOTONICITY
# ============================================================================

class TestMonotonicity:
    def test_132_is_monotone(self, table_132):
        assert table_violations(table_132) == []

    def test_132_is_strictly_monotone_after_first_column(self, table_132):
        assert table_violations(table_132, strict=True) == []

    def test_123_132_counterexample(self, table_123_132):
        found = table_violations(table_123_132)
        assert found[0] == MonotonicityViolation(n=3, ell=1, lower=1, upper=2)
        first_column = {(v.n, v.ell) for v in found if v.ell == 1}
        assert first_column == {(n, 1) for n in range(3, 13)}

    def test_check_monotonicity_counts_itself(self):
        assert check_monotonicity("132", 7, workers=1) == []
        assert check_monotonicity(["123", "132"], 4, workers=1)[0].n == 3

    def test_reverse_complement_keeps_block_table(self):
        assert block_table_mismatches(P("132"), P("213"), 7) == []

    def test_mismatch_preconditions(self):
        with pytest.raises(PreconditionError, match="not skew indecomposable"):
            block_table_mismatches(P("4231"), P("1324"), 5)
        with pytest.raises(PreconditionError, match="not Wilf-equivalent"):
            block_table_mismatches(P("1342"), P("1234"), 6)


# ============================================================================
# WILF CLASSES
# ============================================================================

class TestWilfClasses:
    def test_length_three_is_one_class(self):
        classification = wilf_classes(3, depth=8, workers=1)
        assert len(classification.classes) == 1
        only = classification.classes[0]
        assert len(only.patterns) == 6
        assert only.counts == (1, 2, 5, 14, 42, 132, 429, 1430)
        assert not only.symmetry_only
        assert classification.evidence == "empirical to n = 8"

    def test_length_two(self):
        classification = wilf_classes(2, depth=4, workers=1)
        assert len(classification.classes) == 1
        assert classification.classes[0].patterns == (P("12"), P("21"))
        assert classification.classes[0].symmetry_only

    def test_csv_layout(self):
        lines = wilf_classes(2, depth=3, workers=1).to_csv().splitlines()
        assert lines[0] == "pattern,class_id,av_1,av_2,av_3"
        assert lines[1] == "12,1,1,1,1"

    def test_unknown_pattern_lookup(self):
        with pytest.raises(KeyError):
            wilf_classes(2, depth=3, workers=1).class_of(P("123"))

    def test_guards(self):
        with pytest.raises(PreconditionError):
            wilf_classes(1, depth=3)
        with pytest.raises(ResourceGuardError):
            wilf_classes(5, depth=5)
        with pytest.raises(ResourceGuardError):
            wilf_classes(3, depth=9, ceiling=8)

    @pytest.mark.slow
    def test_length_four_has_three_classes(self):
        classification = wilf_classes(4, depth=7, workers=1)
        assert len(classification.classes) == 3
        hardest = classification.class_of(P("1324"))
        assert set(hardest.patterns) == {P("1324"), P("4231")}
        assert hardest.symmetry_only
        assert hardest.counts[-1] == 2762
        assert not classification.class_of(P("1234")).symmetry_only
        assert classification.class_of(P("1342")).counts[-1] == 2740


# ============================================================================
# COVERED PATTERNS ARE MONOTONE
# ============================================================================

def test_length_three_monotone_and_bounded():
    for q in all_permutations(3):
        table = count_by_blocks(9, q, workers=1)
        assert table_violations(table) == [], str(q)
        assert sequence_bound_violations(table) == [], str(q)


@pytest.mark.slow
def test_covered_length_four_patterns_are_monotone():
    covered = [r.pattern for r in applicability_for_length(4, depth=8) if r.covered]
    assert P("1324") not in covered
    for q in covered:
        assert check_monotonicity(q, 9, workers=1) == [], str(q)
