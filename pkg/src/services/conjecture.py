"""Status of the pure-tone characterization on catalogue arrangements.

For a simplicial arrangement cA the following are expected to agree:
  (a) cA is combinatorially A(6m, 1);
  (b) some eigenspace H^1(F)_lambda with lambda != 1 is nonzero;
  (c) the spectrum is pure-tone;
  (d) cA has a k-multinet for some k >= 3;
  (e) cA has a 3-multinet.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from sympy import divisors

from src.catalogue import a2n1
from src.geometry import ProjArrangement
from src.services.multinets import search_multinets
from src.services.spectrum_service import SpectrumService, get_spectrum_service

logger = logging.getLogger(__name__)

Signature = Tuple[Tuple[int, ...], ...]


def line_signature(arrangement: ProjArrangement) -> Signature:
    """Sorted multiplicities of the points on each line, lines sorted."""
    rows = []
    for index in range(len(arrangement)):
        rows.append(tuple(sorted(p.multiplicity for p in arrangement.points_on(index))))
    return tuple(sorted(rows))


def matches_a6m1(arrangement: ProjArrangement) -> bool:
    """Whether cA has the line signature of A(|cA|, 1) with 6 | |cA|."""
    lines = len(arrangement)
    if lines % 6:
        return False
    return line_signature(arrangement) == line_signature(a2n1(lines // 2))


@dataclass(frozen=True)
class ConjectureRow:
    name: str
    simplicial: bool
    a6m1: bool
    nontrivial: bool
    pure_tone: bool
    multinet_orders: Tuple[int, ...]
    three_multinet: bool
    exhaustive: bool

    @property
    def has_multinet(self) -> bool:
        return bool(self.multinet_orders)

    @property
    def statements(self) -> Dict[str, bool]:
        return {
            "a": self.a6m1,
            "b": self.nontrivial,
            "c": self.pure_tone,
            "d": self.has_multinet,
            "e": self.three_multinet,
        }

    @property
    def consistent(self) -> bool:
        """True when all five statements agree, or cA is not simplicial."""
        if not self.simplicial:
            return True
        return len(set(self.statements.values())) == 1


def conjecture_row(
    arrangement: ProjArrangement,
    service: Optional[SpectrumService] = None,
    budget: Optional[int] = None,
) -> ConjectureRow:
    """Evaluate statements (a)-(e) on one arrangement.

    Multinet searches stop at the first hit per order. exhaustive is False
    when some order's search ran out of budget without a hit.
    """
    service = service or get_spectrum_service()
    spectrum = service.analyze(arrangement)

    orders = []
    exhaustive = True
    for k in divisors(len(arrangement)):
        if k < 3:
            continue
        search = search_multinets(arrangement, k, budget=budget, limit=1)
        if search.multinets:
            orders.append(k)
        elif not search.exhaustive:
            exhaustive = False

    row = ConjectureRow(
        name=arrangement.name,
        simplicial=arrangement.is_simplicial(),
        a6m1=matches_a6m1(arrangement),
        nontrivial=any(r.total_dimension() for r in spectrum.orders),
        pure_tone=spectrum.pure_tone,
        multinet_orders=tuple(orders),
        three_multinet=3 in orders,
        exhaustive=exhaustive,
    )
    if not row.consistent:
        logger.error(f"{arrangement.name}: characterization statements disagree: {row.statements}")
    return row
