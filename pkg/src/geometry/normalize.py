"""Deconing and coordinate normalization of arrangements.

After normalization the affine lines satisfy:
- no line is horizontal;
- distinct intersection points have distinct abscissas;
- every intersection point lies in the upper half-plane y > 0;
- the lines meet the x-axis at 0 < a_1 < ... < a_n, in line order;
- the origin is on the negative side of every defining form.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import count, islice
from math import gcd
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from sympy import QQ

from src.arithmetic import RealAlgebraic
from src.config.settings import get_settings
from src.geometry.arrangement import Point, ProjArrangement, ProjLine
from src.geometry.exceptions import InvalidArrangementError, NormalizationError

logger = logging.getLogger(__name__)

Matrix3 = Tuple[Tuple[RealAlgebraic, ...], ...]

ZERO = RealAlgebraic.rational(0)
ONE = RealAlgebraic.rational(1)


@dataclass(frozen=True)
class AffineLine:
    """The line a x + b y + c = 0 of the affine chart z = 1."""

    a: RealAlgebraic
    b: RealAlgebraic
    c: RealAlgebraic
    source: int
    slope: Optional[RealAlgebraic] = field(init=False, compare=False, repr=False)
    intercept: Optional[RealAlgebraic] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.b:
            object.__setattr__(self, "slope", -self.a / self.b)
            object.__setattr__(self, "intercept", -self.c / self.b)
        else:
            object.__setattr__(self, "slope", None)
            object.__setattr__(self, "intercept", None)

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    @property
    def crossing(self) -> RealAlgebraic:
        """Abscissa of the intersection with the x-axis."""
        return -self.c / self.a

    def height(self, x: RealAlgebraic) -> RealAlgebraic:
        return self.slope * x + self.intercept

    def evaluate(self, x, y) -> RealAlgebraic:
        return self.a * x + self.b * y + self.c

    def is_parallel(self, other: "AffineLine") -> bool:
        return not (self.a * other.b - self.b * other.a)

    def as_projective(self) -> ProjLine:
        return ProjLine(self.a, self.b, self.c)


@dataclass(frozen=True)
class Vertex:
    """An affine intersection point with the normalized lines through it."""

    x: RealAlgebraic
    y: RealAlgebraic
    incident: FrozenSet[int]


@dataclass(frozen=True)
class NormalizedArrangement:
    """The deconed arrangement A of cA in normalized coordinates.

    Line i of the normalized arrangement is, up to the recorded sign flip,
    the image of line source_indices[i] of the projective arrangement under
    line -> line . transform.
    """

    lines: Tuple[AffineLine, ...]
    infinity_index: int
    parent: ProjArrangement
    transform: Matrix3
    flips: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def crossings(self) -> Tuple[RealAlgebraic, ...]:
        return tuple(line.crossing for line in self.lines)

    @property
    def source_indices(self) -> Tuple[int, ...]:
        return tuple(line.source for line in self.lines)

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        """Affine intersection points sorted by abscissa."""
        grouped = _intersections([(l.a, l.b, l.c) for l in self.lines])
        vertices = [Vertex(x, y, frozenset(inc)) for (x, y), inc in grouped.items()]
        return tuple(sorted(vertices, key=lambda v: v.x))

    def parallel(self, i: int, j: int) -> bool:
        return self.lines[i].is_parallel(self.lines[j])

    def parallel_class(self, i: int) -> Tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.parallel(i, j))

    def chart_direction(self, i: int) -> Tuple[RealAlgebraic, RealAlgebraic]:
        """Direction (dx, dy) of line i in the affine chart of the line at infinity.

        The chart is the one before shearing and translating, so it is the
        plain (x, y) plane when the line at infinity is z = 0.
        """
        infinity = self.parent[self.infinity_index].coefficients
        source = self.parent[self.lines[i].source].coefficients
        a, b, _ = _apply(source, _chart_matrix(infinity))
        return b, -a

    def restore_line(self, i: int) -> ProjLine:
        """Map normalized line i back to a multiple of its original triple."""
        line = self.lines[i]
        inverse = _inverse3(self.transform)
        row = _apply((line.a, line.b, line.c), inverse)
        return ProjLine(*(x * self.flips[i] for x in row))


def rational_candidates() -> Iterator:
    """Rationals 0, +-1, +-2, +-1/2, +-3, +-1/3, ... ordered by |p| + q."""
    yield QQ(0)
    for total in count(2):
        for q in range(1, total):
            p = total - q
            if gcd(p, q) == 1:
                yield QQ(p, q)
                yield QQ(-p, q)


def _first_admissible(predicate: Callable, what: str, subject: str):
    limit = get_settings().shear_candidate_limit
    for candidate in islice(rational_candidates(), limit):
        if predicate(candidate):
            return candidate
    raise NormalizationError(subject, f"No admissible {what} among {limit} candidates")


def _apply(row: Sequence[RealAlgebraic], matrix: Matrix3) -> Point:
    return tuple(
        row[0] * matrix[0][j] + row[1] * matrix[1][j] + row[2] * matrix[2][j]
        for j in range(3)
    )


def _matmul3(left: Matrix3, right: Matrix3) -> Matrix3:
    return tuple(_apply(left[i], right) for i in range(3))


def _inverse3(m: Matrix3) -> Matrix3:
    cofactor = [
        [
            m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
            - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]
            for j in range(3)
        ]
        for i in range(3)
    ]
    det = sum((m[0][j] * cofactor[j][0] for j in range(3)), ZERO)
    return tuple(tuple(cofactor[i][j] / det for j in range(3)) for i in range(3))


def _matrix(rows) -> Matrix3:
    return tuple(
        tuple(x if isinstance(x, RealAlgebraic) else RealAlgebraic.rational(x) for x in row)
        for row in rows
    )


def _intersections(lines: Sequence[Point]) -> Dict[Tuple[RealAlgebraic, RealAlgebraic], set]:
    """Affine intersection points of (a, b, c) triples with incident indices."""
    points: Dict[Tuple[RealAlgebraic, RealAlgebraic], set] = {}
    for i in range(len(lines)):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if not det:
                continue
            x = (b1 * c2 - b2 * c1) / det
            y = (c1 * a2 - c2 * a1) / det
            points.setdefault((x, y), set()).update((i, j))
    return points


def _chart_matrix(infinity: Point) -> Matrix3:
    """Columns v_1, v_2, b_3 with infinity . v = 0 and infinity . b_3 = 1."""
    i0 = next(i for i in range(3) if infinity[i])
    others = [j for j in range(3) if j != i0]
    columns = []
    for j in others:
        column = [ZERO, ZERO, ZERO]
        column[j] = ONE
        column[i0] = -infinity[j] / infinity[i0]
        columns.append(column)
    last = [ZERO, ZERO, ZERO]
    last[i0] = ONE / infinity[i0]
    columns.append(last)
    return tuple(tuple(columns[c][r] for c in range(3)) for r in range(3))


def decone(arrangement: ProjArrangement, infinity_index: Optional[int] = None) -> NormalizedArrangement:
    """Send one line to infinity and normalize the remaining affine lines.

    Args:
        arrangement: The projective arrangement cA
        infinity_index: Line of cA to use as H_infinity; defaults to the
            arrangement's designated line

    Returns:
        NormalizedArrangement with the transformation recorded

    Raises:
        InvalidArrangementError: If the index is invalid or the remaining
            lines have no affine intersection
        NormalizationError: If the shear search is exhausted
    """
    if infinity_index is None:
        infinity_index = arrangement.default_infinity
    if not 0 <= infinity_index < len(arrangement):
        raise InvalidArrangementError(
            arrangement.name, f"Line at infinity {infinity_index} is out of range"
        )

    transform = _chart_matrix(arrangement[infinity_index].coefficients)
    sources = [i for i in range(len(arrangement)) if i != infinity_index]
    rows = [_apply(arrangement[i].coefficients, transform) for i in sources]

    points = list(_intersections(rows))
    if not points:
        raise InvalidArrangementError(
            arrangement.name,
            f"All lines meet line {infinity_index} in one point; nothing remains to normalize",
        )

    # x-shear: (a, b, c) -> (a, b - s a, c) moves (x, y) to (x + s y, y)
    s = _first_admissible(
        lambda s: len({x + y * s for x, y in points}) == len(points),
        "x-shear",
        arrangement.name,
    )
    # y-shear: (a, b, c) -> (a - t b, b, c) moves (x, y) to (x, y + t x)
    rows_x = [(a, b - a * s, c) for a, b, c in rows]
    t = _first_admissible(
        lambda t: all(a - b * t for a, b, _ in rows_x),
        "y-shear",
        arrangement.name,
    )
    shear = _matrix([[1 + s * t, -s, 0], [-t, 1, 0], [0, 0, 1]])
    transform = _matmul3(transform, shear)

    sheared = [(x + y * s, y + (x + y * s) * t) for x, y in points]
    v = min(y for _, y in sheared) - 1
    rows = [_apply(arrangement[i].coefficients, transform) for i in sources]
    rows = [(a, b, c + b * v) for a, b, c in rows]
    u = min(-c / a for a, _, c in rows) - 1
    rows = [(a, b, c + a * u) for a, b, c in rows]
    translation = (
        (ONE, ZERO, u),
        (ZERO, ONE, v),
        (ZERO, ZERO, ONE),
    )
    transform = _matmul3(transform, translation)

    order = sorted(range(len(rows)), key=lambda i: -rows[i][2] / rows[i][0])
    lines: List[AffineLine] = []
    flips: List[int] = []
    for i in order:
        a, b, c = rows[i]
        flip = -1 if c > 0 else 1
        lines.append(AffineLine(a * flip, b * flip, c * flip, sources[i]))
        flips.append(flip)

    logger.debug(
        f"Deconed {arrangement.name} at line {infinity_index}: shears ({s}, {t}), "
        f"translation ({u}, {v})"
    )
    return NormalizedArrangement(
        lines=tuple(lines),
        infinity_index=infinity_index,
        parent=arrangement,
        transform=transform,
        flips=tuple(flips),
    )
