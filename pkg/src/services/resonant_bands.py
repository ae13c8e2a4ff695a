"""Bands, resonance and standing waves.

A band is the strip between two consecutive parallel lines. Its length is
the number of lines separating its two unbounded chambers; a band is
k-resonant when k divides the length. For a k-resonant band B the standing
wave has coefficient z^d - z^-d on each chamber of B, with z = zeta_2k and
d the distance to the upper unbounded chamber u1. The eigenspace
H^1(F)_lambda for lambda = exp(2 pi i / k) is the kernel of the linear map
sending each resonant band to its standing wave.
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from src.arithmetic import CycMatrix, Cyclotomic, Kernel, RealAlgebraic, cyc_root
from src.geometry import Chamber, NormalizedArrangement, chamber_index, distance
from src.geometry.chambers import SignVector
from src.services.exceptions import InvalidOrderError, InvariantViolationError, NotResonantError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Band:
    """Strip between the consecutive parallel lines lower < upper."""

    index: int
    lower: int
    upper: int
    parallel_class: Tuple[int, ...]
    u1: Chamber
    u2: Chamber
    interior: Tuple[Chamber, ...]
    length: int
    infinity_multiplicity: int

    @property
    def label(self) -> str:
        return f"B{self.index + 1}"

    @property
    def bounded_interior(self) -> Tuple[Chamber, ...]:
        return tuple(c for c in self.interior if c.bounded)

    def is_resonant(self, k: int) -> bool:
        return self.length % k == 0


@dataclass(frozen=True)
class StandingWave:
    """Coefficients of the standing wave of a band, keyed by sign vector."""

    band: Band
    k: int
    coefficients: Dict[SignVector, Cyclotomic]

    def coefficient(self, chamber: Chamber) -> Cyclotomic:
        return self.coefficients.get(chamber.signs, Cyclotomic.zero(2 * self.k))

    @property
    def support(self) -> Tuple[SignVector, ...]:
        return tuple(s for s, c in self.coefficients.items() if c)


@dataclass(frozen=True)
class NablaKernel:
    """Kernel of the standing-wave map on k-resonant bands."""

    k: int
    bands: Tuple[Band, ...]
    rows: Tuple[Chamber, ...]
    matrix: CycMatrix
    kernel: Kernel

    @property
    def dimension(self) -> int:
        return self.kernel.dimension

    @property
    def relations(self) -> Tuple[Tuple[Cyclotomic, ...], ...]:
        return self.kernel.basis


def _infinite_point_multiplicity(arrangement: NormalizedArrangement, line: int) -> int:
    source = arrangement.lines[line].source
    infinity = arrangement.infinity_index
    for point in arrangement.parent.multiple_points():
        if source in point.incident and infinity in point.incident:
            return point.multiplicity
    raise InvariantViolationError(
        arrangement.parent.name, f"Line {source} does not meet the line at infinity"
    )


def _direction_key(arrangement: NormalizedArrangement, line: int) -> Tuple[int, RealAlgebraic]:
    """Horizontal lines first, then by increasing dx/dy in the chart."""
    dx, dy = arrangement.chart_direction(line)
    if dy.is_zero:
        return 0, RealAlgebraic.rational(0)
    return 1, dx / dy


def find_bands(arrangement: NormalizedArrangement, chambers: Sequence[Chamber]) -> Tuple[Band, ...]:
    """All bands, ordered by the direction of their parallel class.

    Lines are sorted by their x-axis crossings, so consecutive parallel lines
    are adjacent indices. u2 is the chamber U_p containing the x-axis segment
    of the band and u1 is the opposite end of the strip.

    Bands are numbered by the direction of their lines in the chart of the
    line at infinity: the horizontal class first, then the other classes by
    increasing dx/dy. Bands of one class keep their crossing order.

    Raises:
        InvariantViolationError: If a band's length disagrees with
            n + 1 - mult of its point at infinity
    """
    n = arrangement.n
    index = chamber_index(chambers)
    found: List[Band] = []
    for p in range(n - 1):
        if not arrangement.parallel(p, p + 1):
            continue
        parallel_class = arrangement.parallel_class(p)
        lower_end = tuple(1 if i <= p else -1 for i in range(n))
        upper_end = tuple(
            s if i in parallel_class else -s for i, s in enumerate(lower_end)
        )
        if lower_end not in index or upper_end not in index:
            raise InvariantViolationError(
                arrangement.parent.name, f"Band above line {p} lacks an unbounded end"
            )
        u1, u2 = index[upper_end], index[lower_end]
        interior = tuple(c for c in chambers if c.signs[p] > 0 and c.signs[p + 1] < 0)
        length = distance(u1, u2)
        multiplicity = _infinite_point_multiplicity(arrangement, p)
        if length != n + 1 - multiplicity or length != n - len(parallel_class):
            raise InvariantViolationError(
                arrangement.parent.name,
                f"Band above line {p} has length {length}, expected {n + 1 - multiplicity}",
            )
        found.append(
            Band(
                index=0,
                lower=p,
                upper=p + 1,
                parallel_class=parallel_class,
                u1=u1,
                u2=u2,
                interior=interior,
                length=length,
                infinity_multiplicity=multiplicity,
            )
        )
    found.sort(key=lambda b: _direction_key(arrangement, b.lower))
    found = [replace(band, index=i) for i, band in enumerate(found)]
    logger.debug(
        f"{arrangement.parent.name}: {len(found)} bands with lengths "
        f"{[b.length for b in found]}"
    )
    return tuple(found)


def check_order(k: int, lines: int) -> None:
    """Validate that k > 1 divides |cA|."""
    if k < 2 or lines % k:
        raise InvalidOrderError(k, lines)


def resonant_bands(bands: Sequence[Band], k: int) -> Tuple[Band, ...]:
    return tuple(b for b in bands if b.is_resonant(k))


def standing_wave(band: Band, k: int, swapped: bool = False) -> StandingWave:
    """Standing wave of a k-resonant band.

    Args:
        band: The band
        k: Eigenvalue order
        swapped: Measure distances from u2 instead of u1

    Raises:
        NotResonantError: If k does not divide the band length
        InvariantViolationError: If an end chamber gets a nonzero coefficient
    """
    if not band.is_resonant(k):
        raise NotResonantError(band.label, k)
    reference = band.u2 if swapped else band.u1
    order = 2 * k

    def coefficient(chamber: Chamber) -> Cyclotomic:
        d = distance(reference, chamber)
        return cyc_root(order, d) - cyc_root(order, -d)

    for end in (band.u1, band.u2):
        if coefficient(end):
            raise InvariantViolationError(band.label, "Standing wave does not vanish at an end")

    coefficients = {c.signs: coefficient(c) for c in band.bounded_interior}
    return StandingWave(band=band, k=k, coefficients=coefficients)


def nabla_kernel(
    arrangement: NormalizedArrangement,
    chambers: Sequence[Chamber],
    k: int,
    bands: Optional[Sequence[Band]] = None,
) -> NablaKernel:
    """Exact kernel of the standing-wave map over Q(zeta_2k).

    Columns are the k-resonant bands in band order; rows are the chambers
    in the union of the wave supports, in chamber order.
    """
    check_order(k, arrangement.n + 1)
    if bands is None:
        bands = find_bands(arrangement, chambers)
    resonant = resonant_bands(bands, k)
    waves = [standing_wave(b, k) for b in resonant]

    support = set()
    for wave in waves:
        support.update(wave.coefficients)
    rows = tuple(c for c in chambers if c.signs in support)

    order = 2 * k
    zero = Cyclotomic.zero(order)
    entries = [wave.coefficients.get(c.signs, zero) for c in rows for wave in waves]
    matrix = CycMatrix(len(rows), len(waves), entries, order)
    result = NablaKernel(
        k=k, bands=resonant, rows=rows, matrix=matrix, kernel=matrix.kernel()
    )
    logger.info(
        f"{arrangement.parent.name}: k={k}, |RB|={len(resonant)}, dim={result.dimension}"
    )
    return result
