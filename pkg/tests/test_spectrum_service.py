import random
from math import gcd

import pytest
from sympy import Matrix, divisors

from src.catalogue import EXPECTED
from src.config.settings import Settings
from src.services.minimal_complex import LocalSystem, local_system_cohomology
from src.services.spectrum_service import SpectrumService, get_spectrum_service, milnor_spectrum
from tests.conftest import catalogue_entry, catalogue_params, catalogue_spectrum, random_arrangements


def _random_projectivity(rng: random.Random):
    """An invertible 3x3 integer matrix with small entries."""
    while True:
        matrix = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if Matrix(matrix).det() != 0:
            return matrix


class TestCatalogueSpectra:
    """Golden values for every catalogue entry at its default line at infinity."""

    @pytest.mark.parametrize("name", sorted(EXPECTED))
    def test_profile(self, name):
        assert catalogue_entry(name).arrangement.profile() == EXPECTED[name].profile

    @pytest.mark.parametrize("name", sorted(EXPECTED))
    def test_dimensions(self, name):
        """Test dim H^1(F)_lambda for each divisor k."""
        spectrum = catalogue_spectrum(name)

        assert spectrum.dimensions == EXPECTED[name].dims

    @pytest.mark.parametrize("name", sorted(EXPECTED))
    def test_resonant_band_counts(self, name):
        spectrum = catalogue_spectrum(name)

        assert {r.k: r.resonant_count for r in spectrum.orders} == EXPECTED[name].resonant

    @pytest.mark.parametrize("name", sorted(EXPECTED))
    def test_pure_tone(self, name):
        assert catalogue_spectrum(name).pure_tone == EXPECTED[name].pure_tone

    @pytest.mark.parametrize("name", [n for n in sorted(EXPECTED) if EXPECTED[n].relation])
    def test_relation(self, name):
        """Test the kernel vector for k = 3 over the 3-resonant bands."""
        relations = catalogue_spectrum(name).order(3).nabla.relations

        assert len(relations) == 1
        assert len(relations[0]) == len(EXPECTED[name].relation)
        for value, expected in zip(relations[0], EXPECTED[name].relation):
            assert value == expected

    @pytest.mark.parametrize("name", ["A3", "Pappus", "Gru44", "A(12,1)", "B(15)"])
    def test_nonzero_dimensions_certified(self, name):
        """Test nonzero eigenspaces agree with the minimal complex at every primitive root."""
        for result in catalogue_spectrum(name).orders:
            if result.dimension:
                assert result.certified
                assert result.per_root is None

    def test_a3_summary(self):
        """Test A3 has 12 chambers, 2 bounded, and b1 = 5 + 2."""
        spectrum = catalogue_spectrum("A3")

        assert (spectrum.chamber_count, spectrum.bounded_count) == (12, 2)
        assert spectrum.band_count == 2
        assert spectrum.fixed_part == 5
        assert spectrum.b1 == 7

    def test_gru44_b1(self):
        """Test the 15-line realization has b1 = 14 + 2."""
        spectrum = catalogue_spectrum("Gru44")

        assert spectrum.order(3).total_dimension() == 2
        assert spectrum.b1 == 16


class TestInvariance:
    """Independence of the choice of H_infinity and of coordinates."""

    @pytest.mark.parametrize("name", catalogue_params())
    def test_every_line_at_infinity(self, service, name):
        """Test dimensions do not depend on the line sent to infinity."""
        arrangement = catalogue_entry(name).arrangement
        reference = catalogue_spectrum(name)

        for index in range(len(arrangement)):
            spectrum = service.analyze(arrangement, index)
            assert spectrum.dimensions == reference.dimensions
            assert [r.total_dimension() for r in spectrum.orders] == [
                r.total_dimension() for r in reference.orders
            ]

    def test_resonant_count_depends_on_chart(self, service):
        """Test |RB_3| of A(12,1) changes with the line at infinity while dim_3 does not."""
        arrangement = catalogue_entry("A(12,1)").arrangement

        at_7 = service.analyze(arrangement, 7).order(3)
        at_8 = service.analyze(arrangement, 8).order(3)

        assert (at_7.resonant_count, at_8.resonant_count) == (7, 6)
        assert at_7.dimension == at_8.dimension == 1

    @pytest.mark.parametrize("name", catalogue_params())
    def test_random_projective_transformations(self, service, name):
        """Test several random changes of coordinates preserve profile and dimensions."""
        arrangement = catalogue_entry(name).arrangement
        reference = catalogue_spectrum(name).dimensions
        rng = random.Random(name)

        for _ in range(3):
            matrix = _random_projectivity(rng)
            moved = arrangement.transformed(matrix)
            assert moved.profile() == arrangement.profile()
            assert service.analyze(moved).dimensions == reference, f"{matrix}"

    @pytest.mark.parametrize("name", ["A3", "Pappus", "A(10,1)"])
    def test_projective_transformation(self, service, name):
        """Test an invertible rational change of coordinates preserves the spectrum."""
        arrangement = catalogue_entry(name).arrangement
        moved = arrangement.transformed([[2, 1, 0], [0, 1, 3], [1, 0, 1]])

        spectrum = service.analyze(moved)

        assert moved.profile() == arrangement.profile()
        assert spectrum.dimensions == catalogue_spectrum(name).dimensions


class TestOracleAgreement:
    """Resonant-band dimensions against the minimal complex on random input."""

    def test_random_arrangements(self):
        """Test dim ker nabla equals h1 at lambda = exp(2 pi i / k) for every divisor k."""
        service = SpectrumService()
        for arrangement in random_arrangements(100):
            prepared = service.prepare(arrangement)
            for k in divisors(len(arrangement)):
                if k == 1:
                    continue
                result = service.eigenspace(prepared, k)
                system = LocalSystem.eigenvalue(prepared.n, k)
                h1 = local_system_cohomology(prepared.normalized, system, prepared.chambers)[1]
                assert result.dimension == h1, f"{arrangement.name} k={k}"

    def test_random_arrangements_every_primitive_root(self):
        """Test dim ker nabla equals h1 at exp(2 pi i j / k) for every j prime to k."""
        service = SpectrumService()
        for arrangement in random_arrangements(30, seed=7):
            prepared = service.prepare(arrangement)
            for k in divisors(len(arrangement))[1:]:
                dimension = service.eigenspace(prepared, k).dimension
                for j in range(1, k):
                    if gcd(j, k) != 1:
                        continue
                    system = LocalSystem.eigenvalue(prepared.n, k, j)
                    h1 = local_system_cohomology(prepared.normalized, system, prepared.chambers)[1]
                    assert dimension == h1, f"{arrangement.name} k={k} j={j}"

    def test_without_certification(self, a3):
        """Test disabling certification still reports the kernel dimension."""
        service = SpectrumService(Settings(certify_primitive_roots=False))

        result = service.eigenspace(service.prepare(a3), 3)

        assert result.dimension == 1
        assert not result.certified


class TestSpectrumService:
    """Unit tests for service plumbing."""

    def test_singleton(self):
        assert get_spectrum_service() is get_spectrum_service()

    def test_milnor_spectrum(self, a3):
        spectrum = milnor_spectrum(a3, 0)

        assert spectrum.infinity_index == 0
        assert spectrum.dimensions == {2: 0, 3: 1, 6: 0}

    def test_orders_are_divisors(self, pappus):
        spectrum = catalogue_spectrum("Pappus")

        assert [r.k for r in spectrum.orders] == [3, 9]
        assert len(pappus) == 9
