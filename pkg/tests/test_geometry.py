import random
from itertools import combinations

import pytest
from sympy import QQ

from src.arithmetic import sqrt_rational
from src.geometry import (
    DegenerateLineError,
    DuplicateLineError,
    InvalidArrangementError,
    ProjArrangement,
    ProjLine,
    chamber_index,
    decone,
    distance,
    enumerate_chambers,
    separating_set,
    zaslavsky_counts,
)
from src.geometry.normalize import rational_candidates
from tests.conftest import catalogue_entry, random_arrangements


class TestProjArrangement:
    """Unit tests for projective arrangements and their intersection points."""

    def test_a3_profile(self, a3):
        """Test A3 has 4 triple and 3 double points."""
        assert len(a3) == 6
        assert a3.profile() == {2: 3, 3: 4}
        assert a3.default_infinity == 5

    def test_every_pair_meets_once(self, a3):
        pairs = set()
        for point in a3.multiple_points():
            for i in point.incident:
                for j in point.incident:
                    if i < j:
                        assert (i, j) not in pairs
                        pairs.add((i, j))

        assert len(pairs) == 15

    def test_points_on_line(self, a3):
        """Test the diagonal passes through two triple points and H_infinity."""
        multiplicities = sorted(p.multiplicity for p in a3.points_on(4))

        assert multiplicities == [2, 3, 3]

    def test_degenerate_line_rejected(self):
        with pytest.raises(DegenerateLineError):
            ProjLine(0, 0, 0)

    def test_duplicate_lines_rejected(self):
        """Test proportional triples are the same line."""
        with pytest.raises(DuplicateLineError) as exc_info:
            ProjArrangement([(1, 0, 0), (0, 1, 0), (2, 0, 0)])

        assert exc_info.value.first == 0
        assert exc_info.value.second == 2

    def test_two_lines_rejected(self):
        """Test at least 3 lines are required after coning."""
        with pytest.raises(InvalidArrangementError):
            ProjArrangement([(1, 0, 0), (0, 0, 1)])

    def test_default_infinity_detected(self):
        arrangement = ProjArrangement([(1, 0, 0), (0, 0, 1), (0, 1, 0)])

        assert arrangement.default_infinity == 1

    def test_mixed_fields_lift_to_common_order(self):
        """Test a sqrt 3 coefficient lifts every line into Q(zeta_12)."""
        arrangement = ProjArrangement([(1, 0, 0), (0, 1, 0), (sqrt_rational(3), -1, 1)])

        assert arrangement.field_order == 12
        assert all(line.order == 12 for line in arrangement)

    def test_simplicial(self, a3):
        """Test A3 is simplicial and the Pappus configuration is not."""
        assert a3.is_simplicial()
        assert not catalogue_entry("Pappus").arrangement.is_simplicial()


class TestDecone:
    """Unit tests for deconing and coordinate normalization."""

    def test_rational_candidates_order(self):
        first = []
        for value in rational_candidates():
            first.append(value)
            if len(first) == 9:
                break

        assert first == [QQ(0), QQ(1), QQ(-1), QQ(2), QQ(-2), QQ(1, 2), QQ(-1, 2), QQ(3), QQ(-3)]

    @pytest.mark.parametrize("name", ["A3", "Pappus", "A(12,2)", "A(8,1)", "Gru244a"])
    def test_normalization_invariants(self, name):
        """Test crossings increase, vertices sit above the x-axis, no line is horizontal."""
        normalized = decone(catalogue_entry(name).arrangement)

        crossings = normalized.crossings
        assert all(x > 0 for x in crossings)
        assert all(a < b for a, b in zip(crossings, crossings[1:]))
        assert all(v.y > 0 for v in normalized.vertices)
        assert len({v.x for v in normalized.vertices}) == len(normalized.vertices)
        for line in normalized.lines:
            assert line.a
            assert line.c.sign() < 0

    def test_source_indices_skip_infinity(self, a3):
        normalized = decone(a3, 2)

        assert sorted(normalized.source_indices) == [0, 1, 3, 4, 5]
        assert normalized.infinity_index == 2

    def test_restore_line(self, a3):
        """Test each normalized line maps back to a multiple of its source."""
        normalized = decone(a3, 0)

        for i, line in enumerate(normalized.lines):
            assert normalized.restore_line(i).is_proportional(a3[line.source])

    def test_invalid_infinity_index(self, a3):
        with pytest.raises(InvalidArrangementError):
            decone(a3, 6)

    def test_pencil_rejected(self):
        """Test a pencil through one point leaves nothing to normalize."""
        pencil = ProjArrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0)])

        with pytest.raises(InvalidArrangementError):
            decone(pencil, 0)


class TestChambers:
    """Unit tests for exact chamber enumeration."""

    def test_a3_counts(self, a3):
        """Test A3 deconed at H_infinity has 12 chambers, 2 bounded."""
        chambers = enumerate_chambers(decone(a3))

        assert len(chambers) == 12
        assert sum(c.bounded for c in chambers) == 2

    @pytest.mark.parametrize("name", ["A3", "Pappus", "GridDiagonal", "A(12,1)", "Gru44"])
    def test_matches_intersection_lattice(self, name):
        """Test enumeration agrees with the counts from the intersection lattice."""
        normalized = decone(catalogue_entry(name).arrangement)
        chambers = enumerate_chambers(normalized)

        assert (len(chambers), sum(c.bounded for c in chambers)) == zaslavsky_counts(normalized)

    def test_random_arrangements_match_lattice(self):
        for arrangement in random_arrangements(20, seed=11):
            normalized = decone(arrangement)
            chambers = enumerate_chambers(normalized)
            assert (len(chambers), sum(c.bounded for c in chambers)) == zaslavsky_counts(normalized)

    def test_witness_has_chamber_signs(self, pappus):
        """Test the witness point of each chamber evaluates to its sign vector."""
        normalized = decone(pappus)

        for chamber in enumerate_chambers(normalized):
            x, y = chamber.witness
            signs = tuple(line.evaluate(x, y).sign() for line in normalized.lines)
            assert signs == chamber.signs

    def test_base_and_opposite_chambers(self, a3):
        """Test the all-minus and all-plus chambers exist and are unbounded."""
        normalized = decone(a3)
        chambers = {c.signs: c for c in enumerate_chambers(normalized)}
        base = chambers[(-1,) * normalized.n]
        opposite = chambers[(1,) * normalized.n]

        assert not base.bounded and not opposite.bounded
        assert separating_set(base, opposite) == frozenset(range(normalized.n))
        assert distance(base, opposite) == normalized.n


def _vertical_walk(normalized, x):
    """Sign vectors met going up the vertical line at abscissa x, with the line crossed between them."""
    crossings = sorted(
        (line.height(x), i) for i, line in enumerate(normalized.lines) if not line.is_vertical
    )
    heights = [h for h, _ in crossings]
    samples = [heights[0] - 1]
    samples += [(low + high) / 2 for low, high in zip(heights, heights[1:])]
    samples.append(heights[-1] + 1)
    signs = [
        tuple(line.evaluate(x, y).sign() for line in normalized.lines) for y in samples
    ]
    return signs, [i for _, i in crossings]


class TestChamberDistance:
    """Properties of the distance between chambers on random arrangements."""

    @pytest.mark.parametrize("arrangement", random_arrangements(8, seed=5), ids=lambda a: a.name)
    def test_distance_is_a_metric(self, arrangement):
        """Test identity, symmetry and the triangle inequality."""
        chambers = enumerate_chambers(decone(arrangement))
        rng = random.Random(arrangement.name)

        for c1, c2 in combinations(chambers, 2):
            assert distance(c1, c2) > 0
            assert distance(c1, c2) == distance(c2, c1)
            assert distance(c1, c2) == len(separating_set(c1, c2))
        for chamber in chambers:
            assert distance(chamber, chamber) == 0
        for _ in range(500):
            c1, c2, c3 = rng.sample(chambers, 3)
            assert distance(c1, c3) <= distance(c1, c2) + distance(c2, c3)

    @pytest.mark.parametrize("arrangement", random_arrangements(8, seed=5), ids=lambda a: a.name)
    def test_adjacent_chambers_at_distance_one(self, arrangement):
        """Test chambers sharing a wall along a vertical walk are one line apart."""
        normalized = decone(arrangement)
        index = chamber_index(enumerate_chambers(normalized))
        abscissas = [v.x for v in normalized.vertices]
        walks = [abscissas[0] - 1, abscissas[-1] + 1]
        walks += [(left + right) / 2 for left, right in zip(abscissas, abscissas[1:])]

        for x in walks:
            signs, crossed = _vertical_walk(normalized, x)
            for below, above, line in zip(signs, signs[1:], crossed):
                assert below in index and above in index
                assert distance(index[below], index[above]) == 1
                assert separating_set(index[below], index[above]) == frozenset({line})

