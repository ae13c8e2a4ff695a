"""Projective line arrangements over real cyclotomic fields."""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.arithmetic import Cyclotomic, RealAlgebraic
from src.arithmetic.cyclotomic import Rational
from src.geometry.exceptions import (
    DegenerateLineError,
    DuplicateLineError,
    InvalidArrangementError,
)

logger = logging.getLogger(__name__)

Point = Tuple[RealAlgebraic, RealAlgebraic, RealAlgebraic]


def as_real(value) -> RealAlgebraic:
    """Coerce an integer, rational or real cyclotomic value to RealAlgebraic."""
    if isinstance(value, RealAlgebraic):
        return value
    if isinstance(value, Cyclotomic):
        return RealAlgebraic(value)
    if isinstance(value, (int, Fraction, Rational)):
        return RealAlgebraic.rational(value)
    return RealAlgebraic.rational(Fraction(str(value)))


def cross(u: Sequence[RealAlgebraic], v: Sequence[RealAlgebraic]) -> Point:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def normalize_point(point: Sequence[RealAlgebraic]) -> Point:
    """Scale a homogeneous triple so its first nonzero coordinate is 1."""
    lead = next(x for x in point if x)
    if lead == 1:
        return tuple(point)
    return tuple(x / lead for x in point)


@dataclass(frozen=True)
class ProjLine:
    """The oriented line a x + b y + c z = 0 of the real projective plane."""

    a: RealAlgebraic
    b: RealAlgebraic
    c: RealAlgebraic

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_real(getattr(self, name)))
        if not (self.a or self.b or self.c):
            raise DegenerateLineError("line")

    @property
    def coefficients(self) -> Point:
        return (self.a, self.b, self.c)

    @property
    def order(self) -> int:
        return lcm(self.a.order, self.b.order, self.c.order)

    def lift(self, order: int) -> "ProjLine":
        return ProjLine(*(x.lift(order) for x in self.coefficients))

    def evaluate(self, point: Sequence[RealAlgebraic]) -> RealAlgebraic:
        return self.a * point[0] + self.b * point[1] + self.c * point[2]

    def scaled(self, factor) -> "ProjLine":
        return ProjLine(*(x * factor for x in self.coefficients))

    def is_proportional(self, other: "ProjLine") -> bool:
        return not any(cross(self.coefficients, other.coefficients))

    def meet(self, other: "ProjLine") -> Point:
        """Normalized homogeneous intersection point of two distinct lines."""
        return normalize_point(cross(self.coefficients, other.coefficients))

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class MultiplePoint:
    """An intersection point of the arrangement with its incident lines."""

    point: Point
    incident: Tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    @property
    def is_multiple(self) -> bool:
        return self.multiplicity >= 3

    def __contains__(self, index: int) -> bool:
        return index in self.incident


class ProjArrangement:
    """A finite set of pairwise distinct lines in RP^2, in a fixed order.

    All coordinates are lifted to one cyclotomic order, the field order of
    the arrangement.
    """

    def __init__(
        self,
        lines: Sequence,
        name: str = "arrangement",
        default_infinity: Optional[int] = None,
    ):
        lines = [line if isinstance(line, ProjLine) else ProjLine(*line) for line in lines]
        if len(lines) < 3:
            raise InvalidArrangementError(
                name, f"At least 3 lines are required, got {len(lines)}"
            )

        order = lcm(*(line.order for line in lines))
        self.name = name
        self.field_order = order
        self.lines: Tuple[ProjLine, ...] = tuple(line.lift(order) for line in lines)

        for i in range(len(self.lines)):
            for j in range(i + 1, len(self.lines)):
                if self.lines[i].is_proportional(self.lines[j]):
                    raise DuplicateLineError(i, j)

        if default_infinity is None:
            default_infinity = self._find_infinity()
        if not 0 <= default_infinity < len(self.lines):
            raise InvalidArrangementError(
                name, f"Line at infinity {default_infinity} is out of range"
            )
        self.default_infinity = default_infinity
        self._points: Optional[Tuple[MultiplePoint, ...]] = None

    def _find_infinity(self) -> int:
        infinity = ProjLine(0, 0, 1)
        for index, line in enumerate(self.lines):
            if line.is_proportional(infinity):
                return index
        return len(self.lines) - 1

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self) -> Iterator[ProjLine]:
        return iter(self.lines)

    def __getitem__(self, index: int) -> ProjLine:
        return self.lines[index]

    def __repr__(self):
        return f"ProjArrangement({self.name!r}, {len(self)} lines, order={self.field_order})"

    def multiple_points(self) -> Tuple[MultiplePoint, ...]:
        """All intersection points of the arrangement grouped by coincidence.

        Returns:
            Points ordered by their sorted incidence tuples; every pair of
            lines is incident to exactly one returned point.
        """
        if self._points is None:
            groups: Dict[Point, set] = {}
            for i in range(len(self.lines)):
                for j in range(i + 1, len(self.lines)):
                    point = self.lines[i].meet(self.lines[j])
                    groups.setdefault(point, set()).update((i, j))
            points = [
                MultiplePoint(point=p, incident=tuple(sorted(inc)))
                for p, inc in groups.items()
            ]
            self._points = tuple(sorted(points, key=lambda p: p.incident))
            logger.debug(f"{self.name}: {len(self._points)} intersection points")
        return self._points

    def profile(self) -> Dict[int, int]:
        """Number of intersection points per multiplicity."""
        counts = Counter(p.multiplicity for p in self.multiple_points())
        return dict(sorted(counts.items()))

    def points_on(self, index: int) -> List[MultiplePoint]:
        return [p for p in self.multiple_points() if index in p.incident]

    def face_counts(self) -> Tuple[int, int, int]:
        """Vertices, edges and regions of the induced cell decomposition of RP^2."""
        points = self.multiple_points()
        f0 = len(points)
        f1 = sum(p.multiplicity for p in points)
        return f0, f1, f1 - f0 + 1

    def is_simplicial(self) -> bool:
        """True when every region of RP^2 cut by the lines is a triangle."""
        _, f1, f2 = self.face_counts()
        return 2 * f1 == 3 * f2

    def transformed(self, matrix: Sequence[Sequence]) -> "ProjArrangement":
        """Apply an invertible projective change of coordinates.

        Args:
            matrix: 3x3 matrix T acting on coefficient rows, line -> line . T

        Returns:
            The image arrangement with the same line order and default
        """
        images = []
        for line in self.lines:
            coefficients = line.coefficients
            images.append(
                ProjLine(
                    *(
                        sum((coefficients[i] * matrix[i][j] for i in range(3)), RealAlgebraic.rational(0))
                        for j in range(3)
                    )
                )
            )
        return ProjArrangement(images, self.name, self.default_infinity)
