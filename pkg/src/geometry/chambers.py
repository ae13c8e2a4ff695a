"""Exact chamber enumeration by a vertical-strip sweep."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from src.arithmetic import RealAlgebraic
from src.geometry.normalize import NormalizedArrangement

logger = logging.getLogger(__name__)

SignVector = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Chamber:
    """A connected component of the complement, identified by its sign vector.

    signs[i] is the sign (+1 or -1) of the defining form of line i on the
    chamber; witness is an exact interior point.
    """

    signs: SignVector
    bounded: bool
    witness: Tuple[RealAlgebraic, RealAlgebraic]

    def __eq__(self, other):
        if not isinstance(other, Chamber):
            return NotImplemented
        return self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    @property
    def label(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def separating_set(self, other: "Chamber") -> FrozenSet[int]:
        return separating_set(self, other)

    def distance(self, other: "Chamber") -> int:
        return distance(self, other)


def separating_set(c1: Chamber, c2: Chamber) -> FrozenSet[int]:
    """Indices of the lines separating two chambers."""
    return frozenset(i for i, (s, t) in enumerate(zip(c1.signs, c2.signs)) if s != t)


def distance(c1: Chamber, c2: Chamber) -> int:
    return sum(1 for s, t in zip(c1.signs, c2.signs) if s != t)


def _sign(value: RealAlgebraic) -> int:
    return value.sign()


def _sample_abscissas(events: Sequence[RealAlgebraic]) -> List[RealAlgebraic]:
    far = max(abs(e) for e in events) + 1
    samples = [-far]
    samples.extend((left + right) / 2 for left, right in zip(events, events[1:]))
    samples.append(far)
    return samples


def enumerate_chambers(arrangement: NormalizedArrangement) -> Tuple[Chamber, ...]:
    """Enumerate every chamber of a normalized arrangement.

    Each strip between consecutive event abscissas is cut by the
    non-vertical lines into gaps whose sign vectors are read off from the
    height order at a sample abscissa. A chamber is unbounded iff it shows
    up as a top or bottom gap, or in one of the two infinite strips.

    Returns:
        Chambers sorted lexicographically by sign vector, with - before +
    """
    lines = arrangement.lines
    n = len(lines)
    events = {v.x for v in arrangement.vertices}
    events.update(line.crossing for line in lines if line.is_vertical)
    events = sorted(events)
    samples = _sample_abscissas(events)

    sloped = [i for i in range(n) if not lines[i].is_vertical]
    upward = {i: _sign(lines[i].b) for i in sloped}

    found: Dict[SignVector, Tuple[RealAlgebraic, RealAlgebraic]] = {}
    unbounded = set()
    for strip, x in enumerate(samples):
        heights = {i: lines[i].height(x) for i in sloped}
        order = sorted(sloped, key=lambda i: heights[i])
        fixed = {
            i: _sign(lines[i].evaluate(x, 0)) for i in range(n) if lines[i].is_vertical
        }
        far = max(abs(h) for h in heights.values()) + 1
        outer_strip = strip == 0 or strip == len(samples) - 1

        for gap in range(len(order) + 1):
            signs = [0] * n
            for i, sign in fixed.items():
                signs[i] = sign
            for rank, i in enumerate(order):
                signs[i] = upward[i] if rank < gap else -upward[i]
            signs = tuple(signs)

            if gap == 0:
                y = -far
            elif gap == len(order):
                y = far
            else:
                y = (heights[order[gap - 1]] + heights[order[gap]]) / 2

            if signs not in found:
                found[signs] = (x, y)
            if outer_strip or gap == 0 or gap == len(order):
                unbounded.add(signs)

    chambers = tuple(
        Chamber(signs=signs, bounded=signs not in unbounded, witness=witness)
        for signs, witness in sorted(found.items())
    )
    logger.debug(
        f"{arrangement.parent.name}: {len(chambers)} chambers, "
        f"{sum(c.bounded for c in chambers)} bounded"
    )
    return chambers


def chamber_index(chambers: Sequence[Chamber]) -> Dict[SignVector, Chamber]:
    return {c.signs: c for c in chambers}


def zaslavsky_counts(arrangement: NormalizedArrangement) -> Tuple[int, int]:
    """Chamber and bounded-chamber counts from the intersection lattice."""
    n = arrangement.n
    excess = sum(len(v.incident) - 1 for v in arrangement.vertices)
    return 1 + n + excess, 1 - n + excess
