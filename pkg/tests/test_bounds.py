import pytest

from src.catalogue import EXPECTED
from src.geometry import ProjArrangement
from src.services.exceptions import MalformedPartitionError
from src.services.multinets import make_multinet, search_multinets, verify_multinet
from src.services.sharp_pairs import BoundKind, sharp_pairs, upper_bound
from src.services.vanishing import line_table, vanishing_report
from tests.conftest import catalogue_entry, catalogue_spectrum

# six tangent lines of a conic: only double points
GENERIC_SIX = [(1, t, t * t) for t in (0, 1, 2, 3, -1, -2)]

# seven lines where every pair sees intersection points on both sides
NO_SHARP_PAIR = [
    (1, 2, 2), (-2, -3, 0), (0, 0, 1), (-2, 3, 0), (1, 3, -3), (-2, -1, -3), (-3, -2, -3),
]

PURE_TONE = sorted(name for name, expected in EXPECTED.items() if expected.dims.get(3) == 1)


def _triple_points(arrangement):
    return [p for p in arrangement.multiple_points() if p.is_multiple]


class TestVerifyMultinet:
    """Unit tests for the multinet axiom check."""

    def test_a3_multinet(self, a3):
        """Test classes meeting only at the four triple points form a 3-multinet."""
        candidate = make_multinet(a3, [[0, 3], [1, 2], [4, 5]], _triple_points(a3))

        verdict = verify_multinet(a3, candidate)

        assert verdict
        assert verdict.failed_axiom is None

    def test_parallel_classes_fail_axiom_ii(self, a3):
        """Test grouping parallel lines leaves x = 0 and y = 1 meeting outside X."""
        candidate = make_multinet(a3, [[0, 1], [2, 3], [4, 5]], _triple_points(a3))

        verdict = verify_multinet(a3, candidate)

        assert not verdict
        assert verdict.failed_axiom == "ii"

    def test_missing_base_point(self, a3):
        candidate = make_multinet(a3, [[0, 3], [1, 2], [4, 5]], _triple_points(a3)[1:])

        assert verify_multinet(a3, candidate).failed_axiom == "ii"

    def test_unequal_sizes(self, a3):
        candidate = make_multinet(a3, [[0], [1, 2, 3], [4, 5]])

        assert verify_multinet(a3, candidate).failed_axiom == "i"

    def test_default_base_points(self, pappus):
        """Test X defaults to the points where classes mix."""
        candidate = make_multinet(pappus, [[0, 1, 2], [3, 4, 5], [6, 7, 8]])

        assert len(candidate.base_points) == 9
        assert verify_multinet(pappus, candidate)

    # malformed partitions

    def test_line_in_two_classes(self, a3):
        with pytest.raises(MalformedPartitionError):
            make_multinet(a3, [[0, 3], [3, 2], [4, 5, 1]])

    def test_missing_line(self, a3):
        with pytest.raises(MalformedPartitionError):
            make_multinet(a3, [[0, 3], [1, 2], [4]])

    def test_index_out_of_range(self, a3):
        with pytest.raises(MalformedPartitionError):
            make_multinet(a3, [[0, 3], [1, 2], [4, 6]])

    def test_two_classes(self, a3):
        with pytest.raises(MalformedPartitionError):
            make_multinet(a3, [[0, 1, 2], [3, 4, 5]])


class TestSearchMultinets:
    """Unit tests for the backtracking multinet search."""

    def test_a3(self, a3):
        result = search_multinets(a3, 3)

        assert result.exhaustive
        assert result.multinets
        assert result.multinets[0].classes == ((0, 3), (1, 2), (4, 5))
        assert all(verify_multinet(a3, m) for m in result.multinets)

    def test_pappus_first_hit(self, pappus):
        result = search_multinets(pappus, 3, limit=1)

        assert len(result.multinets) == 1
        assert result.multinets[0].classes == ((0, 1, 2), (3, 4, 5), (6, 7, 8))

    def test_a12_2_has_none(self, a12_2):
        """Test the exhaustive search finds no 3-multinet on A(12,2)."""
        result = search_multinets(a12_2, 3)

        assert result.multinets == ()
        assert result.exhaustive

    def test_generic_lines(self):
        """Test lines with only double points carry no 3-multinet."""
        arrangement = ProjArrangement(GENERIC_SIX)

        assert arrangement.profile() == {2: 15}
        result = search_multinets(arrangement, 3)
        assert result.multinets == () and result.exhaustive

    def test_k_must_divide(self, a3):
        result = search_multinets(a3, 4)

        assert result.multinets == () and result.nodes == 0

    def test_k_at_least_three(self, a3):
        with pytest.raises(MalformedPartitionError):
            search_multinets(a3, 2)

    def test_budget_truncates(self):
        """Test a tiny node budget is reported as a truncated search."""
        arrangement = catalogue_entry("A(18,1)").arrangement

        result = search_multinets(arrangement, 3, budget=2)

        assert not result.exhaustive
        assert result.nodes <= 3


class TestSharpPairs:
    """Unit tests for sharp pairs and upper bounds."""

    def test_a3(self, a3):
        pairs = [(p.i, p.j) for p in sharp_pairs(a3)]

        assert pairs == [
            (0, 1), (0, 2), (0, 4), (0, 5), (1, 3), (1, 4),
            (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5),
        ]

    def test_pappus_infinity_and_leftmost_vertical(self, pappus):
        """Test H_infinity forms a sharp pair with the leftmost vertical line."""
        pairs = {(p.i, p.j) for p in sharp_pairs(pappus)}
        verticals = [i for i in (3, 6) if pappus[i].b == 0]
        crossing = {i: -pappus[i].c / pappus[i].a for i in verticals}

        assert verticals == [3, 6]
        assert crossing[6] < crossing[3]
        assert (2, 6) in pairs
        assert (2, 3) not in pairs

    def test_rescaling_invariance(self, a3):
        """Test flipping the sign of a line keeps the sharp pairs."""
        lines = list(a3.lines)
        lines[0] = lines[0].scaled(-2)
        flipped = ProjArrangement(lines, default_infinity=5)

        original = {(p.i, p.j): p.empty_region_sign for p in sharp_pairs(a3)}
        rescaled = {(p.i, p.j): p.empty_region_sign for p in sharp_pairs(flipped)}

        assert original.keys() == rescaled.keys()
        for (i, j), sign in original.items():
            assert rescaled[(i, j)] == (-sign if 0 in (i, j) else sign)

    def test_no_sharp_pair(self):
        arrangement = ProjArrangement(NO_SHARP_PAIR)

        assert sharp_pairs(arrangement) == ()
        assert upper_bound(arrangement, 7).kind is BoundKind.UNBOUNDED

    def test_pappus_at_most_one(self, pappus):
        bound = upper_bound(pappus, 3)

        assert bound.kind is BoundKind.AT_MOST_ONE
        assert bound.certificate is not None

    def test_a12_2_zero(self, a12_2):
        """Test A(12,2) has a sharp pair meeting in a point of multiplicity 5."""
        bound = upper_bound(a12_2, 3)

        assert bound.kind is BoundKind.ZERO
        assert (bound.certificate.i, bound.certificate.j) == (0, 1)
        assert bound.certificate.apex.multiplicity == 5

    def test_kind_values(self):
        assert [k.value for k in BoundKind] == ["unbounded", "<=1", "=0"]


class TestVanishingReport:
    """Unit tests for vanishing criteria and consistency checks."""

    def test_a12_2_no_criterion(self, a12_2, service):
        """Test two non-parallel resonant bands fire no criterion though dim = 0."""
        report = vanishing_report(a12_2, k=3, service=service)

        assert report.criteria == ()
        assert report.resonant_count == 2
        assert report.directions == 2
        assert report.dimension == 0
        assert report.violations == ()

    @pytest.mark.parametrize("k", [2, 4, 6])
    def test_grid_diagonal_at_infinity(self, service, k):
        """Test sending the diagonal to infinity leaves no k-resonant band."""
        arrangement = catalogue_entry("GridDiagonal").arrangement

        report = vanishing_report(arrangement, 10, k, service=service)

        assert "empty-resonant-set" in report.criteria
        assert "no-divisible-point-on-line" in report.criteria
        assert report.vanishes

    def test_line_table(self, pappus):
        table = line_table(pappus, 3)

        assert [row.resonant_points for row in table] == [3] * 9
        assert [row.multiple_points for row in table] == [3] * 9

    def test_vanishing_lines(self, a12_2, service):
        report = vanishing_report(a12_2, k=2, service=service)

        assert report.vanishing_lines == (0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11)

    @pytest.mark.parametrize("name", PURE_TONE)
    def test_pure_tone_entries_consistent(self, service, name):
        """Test no consistency check fails where dim_3 = 1."""
        arrangement = catalogue_entry(name).arrangement

        report = vanishing_report(arrangement, k=3, service=service)

        assert report.dimension == 1
        assert report.criteria == ()
        assert report.violations == ()


class TestSandwich:
    """Multinet lower bounds and sharp-pair upper bounds around dim_3."""

    @pytest.mark.parametrize("name", PURE_TONE)
    def test_certificates_bracket_dimension(self, name):
        arrangement = catalogue_entry(name).arrangement

        search = search_multinets(arrangement, 3, limit=1)
        bound = upper_bound(arrangement, 3)

        assert search.multinets
        assert verify_multinet(arrangement, search.multinets[0])
        assert bound.kind is BoundKind.AT_MOST_ONE
        assert catalogue_spectrum(name).order(3).dimension == 1

    @pytest.mark.parametrize("name", ["A(12,2)", "GridDiagonal"])
    def test_no_multinet_where_dim_vanishes(self, name):
        arrangement = catalogue_entry(name).arrangement

        assert search_multinets(arrangement, 3).multinets == ()
        assert catalogue_spectrum(name).order(3).dimension == 0
