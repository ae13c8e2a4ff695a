"""Exact dense linear algebra over Q(zeta_M)."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.arithmetic.cyclotomic import Cyclotomic, common_order
from src.arithmetic.exceptions import DimensionMismatchError


@dataclass(frozen=True)
class Kernel:
    """Exact kernel of a matrix: its dimension and a normalized basis."""

    dimension: int
    basis: Tuple[Tuple[Cyclotomic, ...], ...]


class CycMatrix:
    """Immutable row-major matrix whose entries share one cyclotomic order."""

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Sequence[Cyclotomic],
        order: Optional[int] = None,
    ):
        entries = [
            e if isinstance(e, Cyclotomic) else Cyclotomic.rational(e) for e in entries
        ]
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                order or 1, f"{rows}x{cols} with {len(entries)} entries"
            )
        if order is None:
            order = common_order(entries)
        self.rows = rows
        self.cols = cols
        self.order = order
        self.entries = tuple(e.lift(order) for e in entries)

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> "CycMatrix":
        zero = Cyclotomic.zero(order)
        return cls(rows, cols, [zero] * (rows * cols), order)

    @classmethod
    def identity(cls, size: int, order: int = 1) -> "CycMatrix":
        one, zero = Cyclotomic.one(order), Cyclotomic.zero(order)
        entries = [one if i == j else zero for i in range(size) for j in range(size)]
        return cls(size, size, entries, order)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], order: Optional[int] = None) -> "CycMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatchError(order or 1, "ragged rows")
        entries = [
            e if isinstance(e, Cyclotomic) else Cyclotomic.rational(e, order or 1)
            for r in rows
            for e in r
        ]
        return cls(len(rows), cols, entries, order)

    def __getitem__(self, index: Tuple[int, int]) -> Cyclotomic:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Cyclotomic, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Cyclotomic]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def permute_columns(self, permutation: Sequence[int]) -> "CycMatrix":
        entries = [self[i, p] for i in range(self.rows) for p in permutation]
        return CycMatrix(self.rows, self.cols, entries, self.order)

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                self.order, f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        entries = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                total = Cyclotomic.zero(self.order)
                for t in range(self.cols):
                    if left[t] and other[t, j]:
                        total = total + left[t] * other[t, j]
                entries.append(total)
        return CycMatrix(self.rows, other.cols, entries)

    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def rref(self) -> Tuple[List[List[Cyclotomic]], List[int]]:
        """Reduced row echelon form with unit pivots in ascending columns.

        Returns:
            Tuple of (reduced rows, pivot columns)
        """
        work = self.to_rows()
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pivot = next((i for i in range(r, self.rows) if work[i][c]), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inverse = work[r][c].inverse()
            work[r] = [e * inverse if e else e for e in work[r]]
            for i in range(self.rows):
                factor = work[i][c]
                if i == r or not factor:
                    continue
                work[i] = [
                    a - factor * b if b else a for a, b in zip(work[i], work[r])
                ]
            pivots.append(c)
            r += 1
        return work, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> Kernel:
        """Exact kernel {v : M v = 0} with deterministic basis.

        Each basis vector has its first nonzero coordinate equal to 1;
        vectors are ordered by their free column.
        """
        work, pivots = self.rref()
        zero, one = Cyclotomic.zero(self.order), Cyclotomic.one(self.order)
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vector = [zero] * self.cols
            vector[f] = one
            for r, p in enumerate(pivots):
                vector[p] = -work[r][f]
            lead = next(v for v in vector if v)
            if lead != one:
                vector = [v / lead for v in vector]
            basis.append(tuple(vector))
        return Kernel(dimension=len(free), basis=tuple(basis))

    def __repr__(self):
        return f"CycMatrix({self.rows}x{self.cols}, order={self.order})"


def kernel(matrix: CycMatrix) -> Kernel:
    return matrix.kernel()
