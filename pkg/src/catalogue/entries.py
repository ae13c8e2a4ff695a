"""Named arrangements with their expected eigenspace data.

Expected values carry a provenance tag: "published" for values stated in the
literature on the arrangement, "derived" for values produced by
this package and frozen as regression data.

Configurations fixed only up to combinatorics (Pappus and the Grunbaum
entries) record their triple points; construction fails if the coordinates
do not realize exactly those triples.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable, Dict, Optional, Sequence, Tuple

from src.arithmetic import sqrt_rational
from src.catalogue.exceptions import (
    IncidenceMismatchError,
    InvalidParameterError,
    UnknownEntryError,
)
from src.catalogue.polygons import a2n1, b3m
from src.geometry import ProjArrangement, ProjLine

logger = logging.getLogger(__name__)

INFINITY = (0, 0, 1)

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class Expected:
    """Known results at the entry's default line at infinity.

    dims and resonant map each divisor k > 1 of |cA| to dim H^1(F)_lambda
    and |RB_k|. relation is the normalized kernel vector for k = 3 over the
    3-resonant bands, when that kernel is one-dimensional.
    """

    profile: Dict[int, int]
    dims: Dict[int, int]
    resonant: Dict[int, int]
    relation: Optional[Tuple[int, ...]] = None
    pure_tone: bool = False
    provenance: str = "published"


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    arrangement: ProjArrangement = field(repr=False)
    description: str = ""
    expected: Optional[Expected] = None
    triples: Optional[Tuple[Triple, ...]] = None

    @property
    def default_infinity(self) -> int:
        return self.arrangement.default_infinity


def _slope(m, p) -> Tuple:
    """The affine line y = m x + p as a projective triple."""
    return (m, -1, p)


def check_incidences(arrangement: ProjArrangement, triples: Sequence[Triple]) -> None:
    """Compare the points of multiplicity >= 3 with the recorded triples.

    Raises:
        IncidenceMismatchError: If the sets differ
    """
    found = {p.incident for p in arrangement.multiple_points() if p.is_multiple}
    wanted = {tuple(sorted(t)) for t in triples}
    if found != wanted:
        missing = sorted(wanted - found)
        extra = sorted(found - wanted)
        raise IncidenceMismatchError(
            arrangement.name, f"missing triples {missing}, unexpected points {extra}"
        )


# fixed entries

def _a3() -> ProjArrangement:
    lines = [(1, 0, 0), (1, 0, -1), (0, 1, 0), (0, 1, -1), (1, -1, 0), INFINITY]
    return ProjArrangement(lines, name="A3", default_infinity=5)


def _grid_diagonal() -> ProjArrangement:
    lines = [(1, 0, -i) for i in range(1, 6)] + [(0, 1, -i) for i in range(1, 6)]
    lines += [(1, -1, 0), INFINITY]
    return ProjArrangement(lines, name="GridDiagonal", default_infinity=11)


def _a12_2() -> ProjArrangement:
    lines = [(1, 0, -i) for i in range(4)] + [(0, 1, -i) for i in range(3)]
    lines += [(1, -1, 0), (1, -1, -1), (1, 1, -2), (1, 1, -3), INFINITY]
    return ProjArrangement(lines, name="A(12,2)", default_infinity=11)


def _pappus() -> ProjArrangement:
    lines = [
        (0, 1, 0), (1, 8, -9), INFINITY,
        (1, 0, 3), (1, 1, 5), (3, -4, 21),
        (1, 0, 7), (1, 1, 3), (3, -4, 15),
    ]
    return ProjArrangement(lines, name="Pappus", default_infinity=2)


def _gru244a() -> ProjArrangement:
    slopes = [
        (0, -1), (-9, 14), (9, 14), (-1, 0), (1, 0), (-3, 2), (3, 2),
        (F(-3, 2), F(7, 2)), (F(3, 2), F(7, 2)), (F(3, 5), F(-14, 5)), (F(-3, 5), F(-14, 5)),
    ]
    lines = [(1, 0, 0)] + [_slope(m, p) for m, p in slopes]
    return ProjArrangement(lines, name="Gru244a", default_infinity=0)


def _gru244b() -> ProjArrangement:
    slopes = [
        (F(-1, 3), 0), (F(1, 3), 0), (0, -4), (0, -1), (0, 5),
        (-1, -10), (-1, 2), (-1, 8), (1, -10), (1, 2), (1, 8),
    ]
    lines = [(1, 0, 0)] + [_slope(m, p) for m, p in slopes]
    return ProjArrangement(lines, name="Gru244b", default_infinity=0)


def _gru44() -> ProjArrangement:
    # no rational realization; coordinates live in Q(sqrt 3)
    r = sqrt_rational(3)
    m10, p10 = r * F(128, 13) + F(216, 13), r * F(16, 13) + F(27, 13)
    m13, p13 = r * F(104, 83) + F(24, 83), r * F(8, 83) + F(21, 83)
    l12 = (
        r * F(9088, 9711) + F(3968, 3237),
        r * F(6928, 3237) + F(36464, 9711),
        r * F(-3760, 9711) + F(-2128, 3237),
    )
    lines = [
        (1, 0, 0), (1, 1, 0), (-1, 1, 0),
        _slope(-16, 1), _slope(16, 1),
        _slope(F(-8, 9), F(1, 9)), _slope(F(-8, 7), F(-1, 7)),
        _slope(F(8, 9), F(1, 9)), _slope(F(8, 7), F(-1, 7)),
        _slope(-m10, -p10), _slope(m10, -p10),
        l12,
        _slope(-m13, -p13), _slope(m13, -p13),
        (-l12[0], l12[1], l12[2]),
    ]
    return ProjArrangement(lines, name="Gru44", default_infinity=0)


PAPPUS_TRIPLES = (
    (0, 3, 7), (0, 4, 8), (0, 5, 6), (1, 3, 8), (1, 4, 6), (1, 5, 7),
    (2, 3, 6), (2, 4, 7), (2, 5, 8),
)

GRU244A_TRIPLES = (
    (0, 2, 3), (0, 4, 5), (0, 6, 7), (0, 8, 9), (0, 10, 11), (1, 4, 6), (1, 5, 7),
    (1, 8, 10), (1, 9, 11), (2, 4, 10), (2, 5, 8), (2, 6, 11), (2, 7, 9), (3, 4, 9),
    (3, 5, 11), (3, 6, 8), (3, 7, 10), (4, 8, 11), (5, 9, 10),
)

GRU244B_TRIPLES = (
    (0, 1, 2), (0, 6, 9), (0, 7, 10), (0, 8, 11), (1, 3, 8), (1, 4, 7), (1, 5, 6),
    (2, 3, 11), (2, 4, 10), (2, 5, 9), (3, 4, 5), (3, 6, 10), (3, 7, 9), (4, 6, 11),
    (4, 8, 9), (5, 7, 11), (5, 8, 10), (6, 7, 8), (9, 10, 11),
)

GRU44_TRIPLES = (
    (0, 1, 2), (0, 3, 4), (0, 5, 7), (0, 6, 8), (0, 9, 10), (0, 11, 14), (0, 12, 13),
    (1, 3, 8), (1, 4, 7), (1, 5, 6), (1, 9, 14), (1, 10, 13), (1, 11, 12),
    (2, 3, 5), (2, 4, 6), (2, 7, 8), (2, 9, 12), (2, 10, 11), (2, 13, 14),
    (3, 6, 13), (3, 7, 11), (3, 10, 12), (4, 5, 14), (4, 8, 12), (4, 9, 13),
    (5, 8, 10), (5, 9, 11), (6, 7, 9), (6, 12, 14), (7, 10, 14), (8, 11, 13),
)


_FIXED: Dict[str, Tuple[Callable[[], ProjArrangement], str, Optional[Tuple[Triple, ...]]]] = {
    "A3": (_a3, "Braid arrangement: unit square, its diagonal and the line at infinity", None),
    "GridDiagonal": (_grid_diagonal, "Lines x = i, y = i for i = 1..5, the diagonal y = x and H_infinity", None),
    "A(12,2)": (_a12_2, "Simplicial arrangement with no nontrivial eigenvalues", None),
    "Pappus": (_pappus, "Pappus configuration (9_3)", PAPPUS_TRIPLES),
    "Gru244a": (_gru244a, "12-line configuration with 19 triple points, first realization", GRU244A_TRIPLES),
    "Gru244b": (_gru244b, "12-line configuration with 19 triple points, second realization", GRU244B_TRIPLES),
    "Gru44": (_gru44, "15-line configuration with 31 triple points over Q(sqrt 3)", GRU44_TRIPLES),
}


def _all_zero(*orders: int) -> Dict[int, int]:
    return {k: 0 for k in orders}


EXPECTED: Dict[str, Expected] = {
    "A3": Expected(
        profile={2: 3, 3: 4},
        dims={2: 0, 3: 1, 6: 0},
        resonant={2: 0, 3: 2, 6: 0},
        relation=(1, -1),
        pure_tone=True,
    ),
    "GridDiagonal": Expected(
        profile={2: 21, 3: 5, 6: 2},
        dims=_all_zero(2, 3, 4, 6, 12),
        resonant={2: 8, 3: 8, 4: 0, 6: 8, 12: 0},
    ),
    "A(12,2)": Expected(
        profile={2: 8, 3: 10, 4: 3, 5: 1},
        dims=_all_zero(2, 3, 4, 6, 12),
        resonant={2: 2, 3: 2, 4: 2, 6: 0, 12: 0},
    ),
    "Pappus": Expected(
        profile={2: 9, 3: 9},
        dims={3: 1, 9: 0},
        resonant={3: 3, 9: 0},
        relation=(1, -1, 1),
        pure_tone=True,
    ),
    "Gru244a": Expected(
        profile={2: 9, 3: 19},
        dims={2: 0, 3: 1, 4: 0, 6: 0, 12: 0},
        resonant={2: 0, 3: 5, 4: 0, 6: 0, 12: 0},
        relation=(1, -1, 1, -1, 0),
        pure_tone=True,
    ),
    "Gru244b": Expected(
        profile={2: 9, 3: 19},
        dims={2: 0, 3: 1, 4: 0, 6: 0, 12: 0},
        resonant={2: 0, 3: 4, 4: 0, 6: 0, 12: 0},
        relation=(1, -1, 1, -1),
        pure_tone=True,
    ),
    "Gru44": Expected(
        profile={2: 12, 3: 31},
        dims={3: 1, 5: 0, 15: 0},
        resonant={3: 7, 5: 0, 15: 0},
        relation=(1, 0, -1, 1, 0, -1, 1),
        pure_tone=True,
    ),
    "A(6,1)": Expected(
        profile={2: 3, 3: 4},
        dims={2: 0, 3: 1, 6: 0},
        resonant={2: 0, 3: 2, 6: 0},
        relation=(1, -1),
        pure_tone=True,
        provenance="derived",
    ),
    "A(8,1)": Expected(
        profile={2: 4, 3: 6, 4: 1},
        dims=_all_zero(2, 4, 8),
        resonant={2: 2, 4: 2, 8: 0},
        provenance="derived",
    ),
    "A(10,1)": Expected(
        profile={2: 5, 3: 10, 5: 1},
        dims=_all_zero(2, 5, 10),
        resonant={2: 0, 5: 3, 10: 0},
        provenance="derived",
    ),
    "A(12,1)": Expected(
        profile={2: 6, 3: 15, 6: 1},
        dims={2: 0, 3: 1, 4: 0, 6: 0, 12: 0},
        resonant={2: 4, 3: 7, 4: 0, 6: 4, 12: 0},
        relation=(0, 1, -1, 0, 0, 1, -1),
        pure_tone=True,
    ),
    "A(18,1)": Expected(
        profile={2: 9, 3: 36, 9: 1},
        dims={2: 0, 3: 1, 6: 0, 9: 0, 18: 0},
        resonant={2: 0, 3: 11, 6: 0, 9: 7, 18: 0},
        relation=(1, -1, 1, 0, 0, -1, 0, 0, 1, -1, 0),
        pure_tone=True,
        provenance="derived",
    ),
    "B(6)": Expected(
        profile={2: 3, 3: 4},
        dims={2: 0, 3: 1, 6: 0},
        resonant={2: 0, 3: 2, 6: 0},
        relation=(1, -1),
        pure_tone=True,
        provenance="derived",
    ),
    "B(9)": Expected(
        profile={2: 6, 3: 10},
        dims={3: 1, 9: 0},
        resonant={3: 3, 9: 0},
        relation=(1, 1, -1),
        pure_tone=True,
        provenance="derived",
    ),
    "B(12)": Expected(
        profile={2: 12, 3: 16, 4: 1},
        dims={2: 0, 3: 1, 4: 0, 6: 0, 12: 0},
        resonant={2: 0, 3: 4, 4: 0, 6: 0, 12: 0},
        relation=(1, -1, 1, -1),
        pure_tone=True,
        provenance="derived",
    ),
    "B(15)": Expected(
        profile={2: 20, 3: 25, 5: 1},
        dims={3: 1, 5: 0, 15: 0},
        resonant={3: 5, 5: 0, 15: 0},
        relation=(1, 1, -1, 1, -1),
        pure_tone=True,
        provenance="derived",
    ),
}

CATALOGUE_NAMES: Tuple[str, ...] = (
    "A3", "GridDiagonal", "A(12,2)", "Pappus", "Gru244a", "Gru244b", "Gru44",
    "A(6,1)", "A(8,1)", "A(10,1)", "A(12,1)", "A(18,1)",
    "B(6)", "B(9)", "B(12)", "B(15)",
)

_A_FAMILY = re.compile(r"^A\((\d+),1\)$")
_B_FAMILY = re.compile(r"^B\((\d+)\)$")


def named(name: str) -> CatalogueEntry:
    """Build the catalogue entry with the given name.

    Args:
        name: A fixed entry name, "A(2n,1)" with n >= 3 or "B(3m)" with m >= 2

    Returns:
        CatalogueEntry with exact coordinates

    Raises:
        UnknownEntryError: If the name matches nothing
        InvalidParameterError: If a family parameter is out of range
        IncidenceMismatchError: If a realization lost its triple points
    """
    key = name.replace(" ", "")
    if key in _FIXED:
        build, description, triples = _FIXED[key]
        arrangement = build()
        if triples is not None:
            check_incidences(arrangement, triples)
        return CatalogueEntry(
            name=key,
            arrangement=arrangement,
            description=description,
            expected=EXPECTED.get(key),
            triples=triples,
        )

    match = _A_FAMILY.match(key)
    if match:
        lines = int(match.group(1))
        if lines % 2:
            raise InvalidParameterError(key, "A(2n,1) needs an even number of lines")
        return CatalogueEntry(
            name=key,
            arrangement=a2n1(lines // 2),
            description=f"Sides and symmetry axes of the regular {lines // 2}-gon",
            expected=EXPECTED.get(key),
        )

    match = _B_FAMILY.match(key)
    if match:
        lines = int(match.group(1))
        if lines % 3:
            raise InvalidParameterError(key, "B(3m) needs a multiple of 3 lines")
        return CatalogueEntry(
            name=key,
            arrangement=b3m(lines // 3),
            description=f"Sides and long diagonals of the regular {2 * lines // 3}-gon",
            expected=EXPECTED.get(key),
        )

    raise UnknownEntryError(name)


def list_entries() -> Tuple[CatalogueEntry, ...]:
    entries = tuple(named(name) for name in CATALOGUE_NAMES)
    logger.info(f"Catalogue: {len(entries)} entries")
    return entries
