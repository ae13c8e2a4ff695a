"""Vanishing criteria and consistency diagnostics for one eigenvalue order."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.geometry import ProjArrangement
from src.services.resonant_bands import check_order
from src.services.spectrum_service import (
    OrderResult,
    PreparedArrangement,
    SpectrumService,
    get_spectrum_service,
)

logger = logging.getLogger(__name__)

A3_PROFILE = {2: 3, 3: 4}


@dataclass(frozen=True)
class LinePoints:
    """Multiple points (multiplicity at least 3) on one line of cA.

    resonant_points counts those whose multiplicity is divisible by k.
    """

    line: int
    resonant_points: int
    multiple_points: int


@dataclass(frozen=True)
class VanishingReport:
    k: int
    infinity_index: int
    resonant_count: int
    directions: int
    dimension: int
    criteria: Tuple[str, ...]
    vanishing_lines: Tuple[int, ...]
    table: Tuple[LinePoints, ...]
    violations: Tuple[str, ...]

    @property
    def vanishes(self) -> bool:
        return bool(self.criteria)


def line_table(arrangement: ProjArrangement, k: int) -> Tuple[LinePoints, ...]:
    rows = []
    for index in range(len(arrangement)):
        points = arrangement.points_on(index)
        rows.append(
            LinePoints(
                line=index,
                resonant_points=sum(
                    1 for p in points if p.is_multiple and p.multiplicity % k == 0
                ),
                multiple_points=sum(1 for p in points if p.is_multiple),
            )
        )
    return tuple(rows)


def vanishing_report(
    arrangement: ProjArrangement,
    infinity_index: Optional[int] = None,
    k: int = 3,
    service: Optional[SpectrumService] = None,
    prepared: Optional[PreparedArrangement] = None,
    result: Optional[OrderResult] = None,
) -> VanishingReport:
    """Evaluate the vanishing criteria for lambda of order k and check them
    against the computed eigenspace dimension.

    Criteria at the chosen line at infinity that force dim = 0:
      empty-resonant-set: no k-resonant band;
      no-divisible-point-on-line: H_infinity has no multiple point of
        multiplicity divisible by k;
      parallel-resonant-bands: all k-resonant bands are parallel;
      at-most-one-divisible-point-on-line: H_infinity has at most one such
        point.
    vanishing_lines lists every line that would fire the last criterion
    if it were chosen as the line at infinity.

    Consistency checks recorded as violations when they fail:
      two-points-per-line, two-multiple-points-per-line,
      three-points-per-line (|cA| >= 7 only) and a3-characterization.
    """
    service = service or get_spectrum_service()
    check_order(k, len(arrangement))
    if prepared is None:
        prepared = service.prepare(arrangement, infinity_index)
    normalized = prepared.normalized
    if result is None:
        result = service.eigenspace(prepared, k)
    resonant = result.nabla.bands
    dimension = result.dimension

    directions = []
    for band in resonant:
        if not any(normalized.parallel(band.lower, other.lower) for other in directions):
            directions.append(band)

    table = line_table(arrangement, k)
    infinity_row = table[normalized.infinity_index]

    criteria: List[str] = []
    if not resonant:
        criteria.append("empty-resonant-set")
    if infinity_row.resonant_points == 0:
        criteria.append("no-divisible-point-on-line")
    if resonant and len(directions) == 1:
        criteria.append("parallel-resonant-bands")
    if infinity_row.resonant_points <= 1:
        criteria.append("at-most-one-divisible-point-on-line")
    vanishing_lines = tuple(row.line for row in table if row.resonant_points <= 1)

    violations: List[str] = []
    if criteria and dimension:
        violations.extend(f"criterion {c} fired but dim = {dimension}" for c in criteria)
    if dimension:
        if any(row.resonant_points < 2 for row in table):
            violations.append("two-points-per-line")
        if any(row.multiple_points < 2 for row in table):
            violations.append("two-multiple-points-per-line")
        if len(arrangement) >= 7 and any(row.resonant_points < 3 for row in table):
            violations.append("three-points-per-line")
        if len(directions) <= 2 and (
            len(arrangement) != 6 or arrangement.profile() != A3_PROFILE
        ):
            violations.append("a3-characterization")
    for violation in violations:
        logger.error(f"{arrangement.name} k={k}: consistency check failed: {violation}")

    return VanishingReport(
        k=k,
        infinity_index=normalized.infinity_index,
        resonant_count=len(resonant),
        directions=len(directions),
        dimension=dimension,
        criteria=tuple(criteria),
        vanishing_lines=vanishing_lines,
        table=table,
        violations=tuple(violations),
    )
