"""Milnor fiber monodromy spectrum of a projective line arrangement."""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Optional, Tuple

from sympy import divisors, totient

from src.config.settings import Settings, get_settings
from src.geometry import Chamber, NormalizedArrangement, ProjArrangement, decone, enumerate_chambers
from src.services.minimal_complex import LocalSystem, local_system_cohomology
from src.services.resonant_bands import Band, NablaKernel, find_bands, nabla_kernel
from src.services.exceptions import InvariantViolationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreparedArrangement:
    """A deconed arrangement with its chambers and bands."""

    normalized: NormalizedArrangement
    chambers: Tuple[Chamber, ...]
    bands: Tuple[Band, ...]

    @property
    def n(self) -> int:
        return self.normalized.n


@dataclass(frozen=True)
class OrderResult:
    """Eigenspace data for the eigenvalues of order k.

    per_root is filled only when primitive roots of the same order disagree;
    it maps j to dim H^1(F)_lambda for lambda = exp(2 pi i j / k).
    """

    k: int
    nabla: NablaKernel
    certified: bool
    per_root: Optional[Dict[int, int]] = None

    @property
    def dimension(self) -> int:
        return self.nabla.dimension

    @property
    def resonant_count(self) -> int:
        return len(self.nabla.bands)

    def total_dimension(self) -> int:
        """Sum of dim H^1(F)_lambda over the primitive k-th roots lambda."""
        if self.per_root is not None:
            return sum(self.per_root.values())
        return int(totient(self.k)) * self.dimension


@dataclass(frozen=True)
class Spectrum:
    """First cohomology of the Milnor fiber split by monodromy eigenvalue."""

    name: str
    n: int
    infinity_index: int
    orders: Tuple[OrderResult, ...]
    chamber_count: int
    bounded_count: int
    band_count: int
    prepared: PreparedArrangement = field(compare=False, repr=False)

    @property
    def fixed_part(self) -> int:
        return self.n

    @property
    def b1(self) -> int:
        return self.n + sum(r.total_dimension() for r in self.orders)

    @property
    def dimensions(self) -> Dict[int, int]:
        return {r.k: r.dimension for r in self.orders}

    @property
    def pure_tone(self) -> bool:
        dims = self.dimensions
        if dims.get(3) != 1:
            return False
        if any(r.per_root is not None for r in self.orders):
            return False
        return all(d == 0 for k, d in dims.items() if k != 3)

    def order(self, k: int) -> OrderResult:
        return next(r for r in self.orders if r.k == k)


class SpectrumService:
    """Compute monodromy eigenspace dimensions by the resonant-band method."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def prepare(self, arrangement: ProjArrangement, infinity_index: Optional[int] = None) -> PreparedArrangement:
        normalized = decone(arrangement, infinity_index)
        chambers = enumerate_chambers(normalized)
        bands = find_bands(normalized, chambers)
        return PreparedArrangement(normalized=normalized, chambers=chambers, bands=bands)

    def eigenspace(self, prepared: PreparedArrangement, k: int) -> OrderResult:
        """dim H^1(F)_lambda for lambda of order k, oracle-certified when nonzero.

        Raises:
            InvariantViolationError: If the kernel dimension disagrees with
                the minimal complex at lambda = exp(2 pi i / k)
        """
        nabla = nabla_kernel(prepared.normalized, prepared.chambers, k, prepared.bands)
        if nabla.dimension == 0 or not self.settings.certify_primitive_roots:
            return OrderResult(k=k, nabla=nabla, certified=nabla.dimension == 0)

        n = prepared.n
        oracle = self._oracle_h1(prepared, k, 1)
        if oracle != nabla.dimension:
            raise InvariantViolationError(
                f"{prepared.normalized.parent.name} k={k}",
                f"Standing-wave kernel has dimension {nabla.dimension}, minimal complex gives {oracle}",
            )
        if k <= 2 or self._oracle_h1(prepared, k, k - 1) == oracle:
            return OrderResult(k=k, nabla=nabla, certified=True)

        per_root = {
            j: self._oracle_h1(prepared, k, j) for j in range(1, k) if gcd(j, k) == 1
        }
        logger.warning(
            f"{prepared.normalized.parent.name}: primitive roots of order {k} "
            f"disagree ({per_root}); reporting per root for n={n}"
        )
        return OrderResult(k=k, nabla=nabla, certified=False, per_root=per_root)

    def _oracle_h1(self, prepared: PreparedArrangement, k: int, j: int) -> int:
        system = LocalSystem.eigenvalue(prepared.n, k, j)
        return local_system_cohomology(prepared.normalized, system, prepared.chambers)[1]

    def analyze(self, arrangement: ProjArrangement, infinity_index: Optional[int] = None) -> Spectrum:
        """Full spectrum of cA deconed at the given line.

        Args:
            arrangement: The projective arrangement cA
            infinity_index: Line used as H_infinity; defaults to the
                arrangement's designated line

        Returns:
            Spectrum with one OrderResult per divisor k > 1 of |cA|
        """
        prepared = self.prepare(arrangement, infinity_index)
        lines = len(arrangement)
        orders = tuple(self.eigenspace(prepared, k) for k in divisors(lines) if k > 1)
        spectrum = Spectrum(
            name=arrangement.name,
            n=prepared.n,
            infinity_index=prepared.normalized.infinity_index,
            orders=orders,
            chamber_count=len(prepared.chambers),
            bounded_count=sum(c.bounded for c in prepared.chambers),
            band_count=len(prepared.bands),
            prepared=prepared,
        )
        logger.info(f"{arrangement.name}: dims {spectrum.dimensions}, b1 = {spectrum.b1}")
        return spectrum


_spectrum_service: Optional[SpectrumService] = None


def get_spectrum_service() -> SpectrumService:
    global _spectrum_service
    if _spectrum_service is None:
        _spectrum_service = SpectrumService()
    return _spectrum_service


def milnor_spectrum(arrangement: ProjArrangement, infinity_index: Optional[int] = None) -> Spectrum:
    return get_spectrum_service().analyze(arrangement, infinity_index)
