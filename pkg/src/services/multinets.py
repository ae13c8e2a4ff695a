"""Multinet verification and search.

A k-multinet on cA (with all line multiplicities 1) is a partition of the
lines into k >= 3 classes with base locus X such that:
  (i)   all classes have the same size;
  (ii)  lines from different classes meet in X;
  (iii) every p in X lies on the same number of lines of each class;
  (iv)  within a class, any two lines are joined by a chain of lines of
        the class whose consecutive intersections lie outside X.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.config.settings import get_settings
from src.geometry import MultiplePoint, ProjArrangement
from src.services.exceptions import MalformedPartitionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Multinet:
    """A partition of the lines of cA into k classes with base points X."""

    k: int
    classes: Tuple[Tuple[int, ...], ...]
    base_points: Tuple[MultiplePoint, ...]


@dataclass(frozen=True)
class MultinetVerdict:
    valid: bool
    failed_axiom: Optional[str] = None
    detail: str = ""

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class MultinetSearch:
    """Outcome of a bounded search; exhaustive is False when the budget ran out."""

    k: int
    multinets: Tuple[Multinet, ...]
    exhaustive: bool
    nodes: int


def _class_of(arrangement: ProjArrangement, classes: Sequence[Sequence[int]]) -> Dict[int, int]:
    owner: Dict[int, int] = {}
    for c, members in enumerate(classes):
        for line in members:
            if not 0 <= line < len(arrangement):
                raise MalformedPartitionError(f"line {line}", "Line index out of range")
            if line in owner:
                raise MalformedPartitionError(f"line {line}", "Line appears in two classes")
            owner[line] = c
    if len(owner) != len(arrangement):
        missing = sorted(set(range(len(arrangement))) - set(owner))
        raise MalformedPartitionError(f"lines {missing}", "Lines missing from the classes")
    if len(classes) < 3:
        raise MalformedPartitionError(f"{len(classes)} classes", "A multinet needs at least 3 classes")
    return owner


def make_multinet(
    arrangement: ProjArrangement,
    classes: Sequence[Sequence[int]],
    base_points: Optional[Sequence[MultiplePoint]] = None,
) -> Multinet:
    """Build a candidate; X defaults to the points where classes mix."""
    owner = _class_of(arrangement, classes)
    if base_points is None:
        base_points = [
            p for p in arrangement.multiple_points()
            if len({owner[i] for i in p.incident}) > 1
        ]
    return Multinet(
        k=len(classes),
        classes=tuple(tuple(sorted(c)) for c in classes),
        base_points=tuple(base_points),
    )


def verify_multinet(arrangement: ProjArrangement, candidate: Multinet) -> MultinetVerdict:
    """Check axioms (i)-(iv) exactly.

    Raises:
        MalformedPartitionError: If the classes do not partition the lines
    """
    owner = _class_of(arrangement, candidate.classes)
    k = len(candidate.classes)

    sizes = {len(c) for c in candidate.classes}
    if len(sizes) != 1:
        return MultinetVerdict(False, "i", f"class sizes {sorted(len(c) for c in candidate.classes)}")

    base = {p.incident for p in candidate.base_points}
    points = arrangement.multiple_points()
    meeting: Dict[Tuple[int, int], MultiplePoint] = {}
    for p in points:
        for a in p.incident:
            for b in p.incident:
                if a < b:
                    meeting[(a, b)] = p

    for (a, b), p in meeting.items():
        if owner[a] != owner[b] and p.incident not in base:
            return MultinetVerdict(False, "ii", f"lines {a} and {b} meet outside X")

    for p in candidate.base_points:
        counts = [0] * k
        for line in p.incident:
            counts[owner[line]] += 1
        if len(set(counts)) != 1:
            return MultinetVerdict(False, "iii", f"point on lines {p.incident} has class counts {counts}")

    for members in candidate.classes:
        reached = {members[0]}
        frontier = [members[0]]
        while frontier:
            a = frontier.pop()
            for b in members:
                if b in reached:
                    continue
                if meeting[(min(a, b), max(a, b))].incident not in base:
                    reached.add(b)
                    frontier.append(b)
        if len(reached) != len(members):
            return MultinetVerdict(False, "iv", f"class {members} is not connected outside X")

    return MultinetVerdict(True)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def search_multinets(
    arrangement: ProjArrangement,
    k: int,
    budget: Optional[int] = None,
    limit: Optional[int] = None,
) -> MultinetSearch:
    """Backtracking search for k-multinets.

    Lines through a point whose multiplicity is not divisible by k must
    share a class, so such lines are merged into blocks first. Blocks are
    then assigned to classes in order, with class labels introduced in
    increasing order to skip relabelled duplicates.

    Args:
        arrangement: The projective arrangement cA
        k: Number of classes, at least 3
        budget: Node limit; defaults to settings.multinet_budget and is
            ignored for arrangements up to settings.multinet_exhaustive_max_lines
        limit: Stop after this many multinets

    Returns:
        MultinetSearch with every multinet found
    """
    settings = get_settings()
    if k < 3:
        raise MalformedPartitionError(f"k={k}", "A multinet needs at least 3 classes")
    total = len(arrangement)
    if total % k:
        return MultinetSearch(k=k, multinets=(), exhaustive=True, nodes=0)
    if budget is None and total > settings.multinet_exhaustive_max_lines:
        budget = settings.multinet_budget
    size = total // k

    points = arrangement.multiple_points()
    merge = _UnionFind(total)
    for p in points:
        if p.multiplicity % k:
            first = p.incident[0]
            for other in p.incident[1:]:
                merge.union(first, other)
    grouped: Dict[int, List[int]] = {}
    for line in range(total):
        grouped.setdefault(merge.find(line), []).append(line)
    blocks = sorted(grouped.values(), key=lambda b: b[0])
    if any(len(b) > size for b in blocks):
        return MultinetSearch(k=k, multinets=(), exhaustive=True, nodes=0)

    incidence: List[List[int]] = [[] for _ in range(total)]
    for index, p in enumerate(points):
        for line in p.incident:
            incidence[line].append(index)
    counts = [[0] * k for _ in points]
    assigned = [0] * len(points)
    fill = [0] * k
    owner = [-1] * total
    found: List[Multinet] = []
    nodes = 0
    exhausted = False

    def consistent(index: int) -> bool:
        p = points[index]
        present = [c for c in counts[index] if c]
        if len(present) < 2:
            return True
        if p.multiplicity % k:
            return False
        share = p.multiplicity // k
        if any(c > share for c in present):
            return False
        if assigned[index] == p.multiplicity:
            return len(present) == k
        return True

    def place(block: List[int], c: int, sign: int) -> None:
        for line in block:
            owner[line] = c if sign > 0 else -1
            for index in incidence[line]:
                counts[index][c] += sign
                assigned[index] += sign
        fill[c] += sign * len(block)

    def backtrack(position: int, used: int) -> bool:
        nonlocal nodes, exhausted
        nodes += 1
        if budget is not None and nodes > budget:
            exhausted = True
            return False
        if position == len(blocks):
            classes = [tuple(i for i in range(total) if owner[i] == c) for c in range(k)]
            candidate = make_multinet(arrangement, classes)
            if verify_multinet(arrangement, candidate):
                found.append(candidate)
                if limit is not None and len(found) >= limit:
                    return False
            return True

        block = blocks[position]
        for c in range(min(used + 1, k)):
            if fill[c] + len(block) > size:
                continue
            place(block, c, 1)
            touched = {index for line in block for index in incidence[line]}
            if all(consistent(index) for index in touched):
                if not backtrack(position + 1, max(used, c + 1)):
                    place(block, c, -1)
                    return False
            place(block, c, -1)
        return True

    completed = backtrack(0, 0)
    exhaustive = completed and not exhausted
    logger.info(
        f"{arrangement.name}: {len(found)} {k}-multinets after {nodes} nodes"
        f"{'' if exhaustive else ' (search truncated)'}"
    )
    return MultinetSearch(k=k, multinets=tuple(found), exhaustive=exhaustive, nodes=nodes)
