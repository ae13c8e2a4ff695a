import pytest

from src.catalogue import (
    CATALOGUE_NAMES,
    CatalogueError,
    IncidenceMismatchError,
    InvalidParameterError,
    UnknownEntryError,
    a2n1,
    b3m,
    check_incidences,
    list_entries,
    named,
    polygon_sides,
)
from src.catalogue.entries import GRU44_TRIPLES, PAPPUS_TRIPLES
from src.geometry import ProjArrangement
from tests.conftest import catalogue_entry


class TestNamed:
    """Unit tests for catalogue lookup."""

    def test_fixed_entry(self):
        entry = named("Pappus")

        assert entry.name == "Pappus"
        assert entry.default_infinity == 2
        assert entry.triples == PAPPUS_TRIPLES
        assert entry.expected.provenance == "published"

    def test_spaces_ignored(self):
        assert named("A(12, 1)").name == "A(12,1)"
        assert named(" B( 9 ) ").name == "B(9)"

    def test_family_outside_listing(self):
        """Test family members not in the listing are built without expected data."""
        entry = named("A(14,1)")

        assert len(entry.arrangement) == 14
        assert entry.expected is None

    def test_unknown_entry(self):
        with pytest.raises(UnknownEntryError) as exc_info:
            named("Hesse")

        assert exc_info.value.name == "Hesse"
        assert isinstance(exc_info.value, CatalogueError)

    @pytest.mark.parametrize("name", ["A(4,1)", "A(7,1)", "B(3)", "B(10)"])
    def test_invalid_family_parameter(self, name):
        with pytest.raises(InvalidParameterError):
            named(name)

    def test_list_entries(self):
        entries = list_entries()

        assert tuple(e.name for e in entries) == CATALOGUE_NAMES
        assert all(e.expected is not None for e in entries)


class TestPolygonFamilies:
    """Unit tests for the polygon-based families."""

    def test_polygon_sides_tangent_to_unit_circle(self):
        """Test each side is at distance 1 from the origin."""
        for line in polygon_sides(5):
            assert line.a * line.a + line.b * line.b == line.c * line.c

    def test_a2n1_layout(self):
        arrangement = a2n1(4)

        assert arrangement.name == "A(8,1)"
        assert len(arrangement) == 8
        assert arrangement.default_infinity == 5
        assert arrangement[5].coefficients == (0, 0, 1)

    def test_a2n1_minimum(self):
        with pytest.raises(InvalidParameterError):
            a2n1(2)

    def test_b3m_minimum(self):
        with pytest.raises(InvalidParameterError):
            b3m(1)

    def test_b6_is_combinatorially_a3(self, a3):
        """Test the square with its two diagonals has the A3 profile."""
        arrangement = catalogue_entry("B(6)").arrangement

        assert arrangement.profile() == a3.profile()
        assert arrangement.default_infinity == 0

    def test_center_multiplicity(self):
        """Test the axes of A(2n,1) meet in one point of multiplicity n."""
        arrangement = catalogue_entry("A(10,1)").arrangement

        assert max(arrangement.profile()) == 5

    @pytest.mark.parametrize("name", ["A(6,1)", "A(12,1)", "A(18,1)"])
    def test_simplicial(self, name):
        assert catalogue_entry(name).arrangement.is_simplicial()


class TestFixedEntries:
    """Unit tests for exact realizations of fixed entries."""

    def test_gru44_field(self):
        """Test the 15-line realization needs sqrt 3."""
        arrangement = catalogue_entry("Gru44").arrangement

        assert len(arrangement) == 15
        assert arrangement.field_order == 12
        assert len(GRU44_TRIPLES) == 31

    @pytest.mark.parametrize("name", ["A3", "GridDiagonal", "A(12,2)", "Pappus", "Gru244a", "Gru244b"])
    def test_rational_entries(self, name):
        assert catalogue_entry(name).arrangement.field_order == 1

    def test_incidence_mismatch(self, a3):
        with pytest.raises(IncidenceMismatchError):
            check_incidences(a3, PAPPUS_TRIPLES)

    def test_perturbed_pappus_rejected(self, pappus):
        """Test moving one line off its triple points is detected."""
        lines = list(pappus.lines)
        lines[0] = (0, 1, 1)
        moved = ProjArrangement(lines, name="Pappus", default_infinity=2)

        with pytest.raises(IncidenceMismatchError):
            check_incidences(moved, PAPPUS_TRIPLES)

    @pytest.mark.parametrize("name", ["Pappus", "Gru244a", "Gru244b", "Gru44"])
    def test_recorded_triples_hold(self, name):
        entry = catalogue_entry(name)

        check_incidences(entry.arrangement, entry.triples)
