"""Sharp pairs and the resulting upper bounds on eigenspace dimensions."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from src.geometry import MultiplePoint, ProjArrangement
from src.services.resonant_bands import check_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SharpPair:
    """Lines i < j such that one region of RP^2 minus both holds no intersection point.

    empty_region_sign is the value of sign(alpha_i) * sign(alpha_j) on the
    empty region; apex is the point where the two lines meet.
    """

    i: int
    j: int
    empty_region_sign: int
    apex: MultiplePoint


class BoundKind(str, Enum):
    UNBOUNDED = "unbounded"
    AT_MOST_ONE = "<=1"
    ZERO = "=0"


@dataclass(frozen=True)
class UpperBound:
    k: int
    kind: BoundKind
    certificate: Optional[SharpPair] = None


def _sign_table(arrangement: ProjArrangement) -> List[List[int]]:
    points = arrangement.multiple_points()
    return [
        [line.evaluate(p.point).sign() for p in points] for line in arrangement
    ]


def sharp_pairs(arrangement: ProjArrangement) -> Tuple[SharpPair, ...]:
    """All sharp pairs (i, j) with i < j, in lexicographic order.

    Only points where at least two lines other than H_i and H_j meet are
    tested; points on H_i or H_j have sign product zero.
    """
    points = arrangement.multiple_points()
    signs = _sign_table(arrangement)
    found: List[SharpPair] = []
    for i in range(len(arrangement)):
        for j in range(i + 1, len(arrangement)):
            seen = set()
            for index, p in enumerate(points):
                others = [h for h in p.incident if h != i and h != j]
                if len(others) < 2:
                    continue
                product = signs[i][index] * signs[j][index]
                if product:
                    seen.add(product)
            if len(seen) == 2:
                continue
            empty = -seen.pop() if seen else 1
            apex = next(p for p in points if i in p.incident and j in p.incident)
            found.append(SharpPair(i=i, j=j, empty_region_sign=empty, apex=apex))
    logger.debug(f"{arrangement.name}: {len(found)} sharp pairs")
    return tuple(found)


def upper_bound(arrangement: ProjArrangement, k: int) -> UpperBound:
    """Upper bound on dim H^1(F)_lambda for lambda of order k.

    A sharp pair gives dim <= 1; if the apex of a sharp pair has
    multiplicity not divisible by k the eigenspace vanishes.
    """
    check_order(k, len(arrangement))
    pairs = sharp_pairs(arrangement)
    if not pairs:
        return UpperBound(k=k, kind=BoundKind.UNBOUNDED)
    for pair in pairs:
        if pair.apex.multiplicity % k:
            return UpperBound(k=k, kind=BoundKind.ZERO, certificate=pair)
    return UpperBound(k=k, kind=BoundKind.AT_MOST_ONE, certificate=pairs[0])
