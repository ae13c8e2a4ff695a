import pytest

from src.catalogue import a2n1
from src.services.conjecture import ConjectureRow, conjecture_row, line_signature, matches_a6m1
from tests.conftest import catalogue_entry


class TestLineSignature:
    """Unit tests for combinatorial comparison with A(6m, 1)."""

    def test_a3_matches_a61(self, a3):
        assert line_signature(a3) == line_signature(a2n1(3))
        assert matches_a6m1(a3)

    def test_b6_matches_a61(self):
        assert matches_a6m1(catalogue_entry("B(6)").arrangement)

    def test_a12_2_does_not_match(self, a12_2):
        """Test A(12,2) has 12 lines but not the signature of A(12,1)."""
        assert not matches_a6m1(a12_2)

    def test_line_count_not_divisible_by_six(self, pappus):
        assert not matches_a6m1(pappus)


class TestConjectureRow:
    """Statements (a)-(e) on simplicial catalogue entries."""

    @pytest.mark.parametrize("name", ["A3", "A(12,1)"])
    def test_all_true(self, service, name):
        row = conjecture_row(catalogue_entry(name).arrangement, service)

        assert row.simplicial
        assert all(row.statements.values())
        assert row.three_multinet
        assert row.consistent

    def test_a12_2_all_false(self, service, a12_2):
        """Test the simplicial A(12,2) has trivial spectrum and no multinet."""
        row = conjecture_row(a12_2, service)

        assert row.simplicial
        assert not any(row.statements.values())
        assert row.exhaustive
        assert row.consistent

    def test_non_simplicial_always_consistent(self):
        row = ConjectureRow(
            name="x",
            simplicial=False,
            a6m1=False,
            nontrivial=True,
            pure_tone=True,
            multinet_orders=(3,),
            three_multinet=True,
            exhaustive=True,
        )

        assert row.consistent
        assert row.has_multinet

    def test_disagreement_detected(self):
        row = ConjectureRow(
            name="x",
            simplicial=True,
            a6m1=False,
            nontrivial=True,
            pure_tone=True,
            multinet_orders=(3,),
            three_multinet=True,
            exhaustive=True,
        )

        assert not row.consistent
        assert list(row.statements) == ["a", "b", "c", "d", "e"]
