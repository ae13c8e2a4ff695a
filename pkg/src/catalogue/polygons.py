"""Arrangements built from regular polygons.

Side lines of the regular N-gon are x cos(2 pi j / N) + y sin(2 pi j / N) = 1,
with coefficients exact in the real subfield of a cyclotomic field.
"""

import logging
from typing import List

from src.arithmetic import RealAlgebraic
from src.arithmetic.real import cos_turn, sin_turn
from src.catalogue.exceptions import InvalidParameterError
from src.geometry import ProjArrangement, ProjLine

logger = logging.getLogger(__name__)


def polygon_sides(sides: int) -> List[ProjLine]:
    """Side lines of the regular polygon with the given number of sides."""
    minus_one = RealAlgebraic.rational(-1)
    return [
        ProjLine(cos_turn(sides, j), sin_turn(sides, j), minus_one)
        for j in range(sides)
    ]


def _through_origin(order: int, exponent: int) -> ProjLine:
    # direction (cos t, sin t) with t = 2 pi exponent / order
    return ProjLine(sin_turn(order, exponent), -cos_turn(order, exponent), 0)


def a2n1(n: int) -> ProjArrangement:
    """A(2n, 1): the n sides of a regular n-gon and its n symmetry axes.

    The line at infinity of the polygon's plane is not part of the
    arrangement. The default line at infinity is axis 1, index n + 1, and the
    coordinates are changed so that this axis is z = 0.

    Raises:
        InvalidParameterError: If n < 3
    """
    if n < 3:
        raise InvalidParameterError(f"A({2 * n},1)", "A(2n,1) requires n >= 3")
    lines = polygon_sides(n) + [_through_origin(2 * n, j) for j in range(n)]
    c, s = cos_turn(2 * n, 1), sin_turn(2 * n, 1)
    zero, one = RealAlgebraic.rational(0), RealAlgebraic.rational(1)
    chart = ((c, zero, s), (s, zero, -c), (zero, one, zero))
    arrangement = ProjArrangement(
        lines, name=f"A({2 * n},1)", default_infinity=n + 1
    ).transformed(chart)
    logger.debug(f"Built {arrangement!r}")
    return arrangement


def b3m(m: int) -> ProjArrangement:
    """B(3m): the 2m sides of a regular 2m-gon and its m long diagonals.

    Raises:
        InvalidParameterError: If m < 2
    """
    if m < 2:
        raise InvalidParameterError(f"B({3 * m})", "B(3m) requires m >= 2")
    sides = 2 * m
    diagonals = [_through_origin(2 * sides, 2 * j + 1) for j in range(m)]
    arrangement = ProjArrangement(
        polygon_sides(sides) + diagonals, name=f"B({3 * m})", default_infinity=0
    )
    logger.debug(f"Built {arrangement!r}")
    return arrangement
