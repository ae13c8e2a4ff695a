"""Twisted minimal cochain complex of a rank-one local system.

The complex lives on chambers: ch^0 = {U_0}, ch^1 = {U_1, ..., U_{n-1}, U_0^v}
and ch^2 the remaining chambers. Its cohomology is the local system
cohomology of the complexified complement; it serves as the oracle for
every eigenspace computation.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from src.arithmetic import CycMatrix, Cyclotomic, cyc_root
from src.geometry import Chamber, NormalizedArrangement, chamber_index, enumerate_chambers, separating_set
from src.services.exceptions import InvalidLocalSystemError, InvariantViolationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalSystem:
    """Torsion rank-one local system given by square roots of its monodromies.

    The monodromy around line i is q_i = zeta_order^(2 e_i) and the fixed
    square root is q_i^(1/2) = zeta_order^(e_i).
    """

    order: int
    half_exponents: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise InvalidLocalSystemError(f"order={self.order}", "Order must be positive")
        object.__setattr__(
            self, "half_exponents", tuple(e % self.order for e in self.half_exponents)
        )

    @classmethod
    def eigenvalue(cls, n: int, k: int, j: int = 1) -> "LocalSystem":
        """The system q_i = exp(2 pi i j / k) on n lines."""
        return cls(order=2 * k, half_exponents=(j,) * n)

    @classmethod
    def trivial(cls, n: int) -> "LocalSystem":
        return cls(order=1, half_exponents=(0,) * n)

    @property
    def n(self) -> int:
        return len(self.half_exponents)

    @property
    def is_trivial(self) -> bool:
        return all(2 * e % self.order == 0 for e in self.half_exponents)

    def other_root(self, index: int) -> "LocalSystem":
        """Same monodromies with the opposite square root on one line."""
        if self.order % 2:
            raise InvalidLocalSystemError(f"order={self.order}", "Square roots differ only for even order")
        exponents = list(self.half_exponents)
        exponents[index] += self.order // 2
        return LocalSystem(self.order, tuple(exponents))

    def separating_exponent(self, indices) -> int:
        return sum(self.half_exponents[i] for i in indices) % self.order


def align_to_normalized(system: LocalSystem, arrangement: NormalizedArrangement) -> LocalSystem:
    """Reorder weights given for the affine lines in file order.

    Args:
        system: Weights for the lines of cA other than the line at infinity,
            in their file order
        arrangement: The normalized arrangement whose line order is used

    Returns:
        The same local system indexed by normalized line order
    """
    if system.n != arrangement.n:
        raise InvalidLocalSystemError(
            f"{system.n} weights", f"Expected {arrangement.n} weights"
        )
    infinity = arrangement.infinity_index
    ranks = [s if s < infinity else s - 1 for s in arrangement.source_indices]
    return LocalSystem(system.order, tuple(system.half_exponents[r] for r in ranks))


def delta(c1: Chamber, c2: Chamber, system: LocalSystem) -> Cyclotomic:
    """Delta(C, C') = prod_{i in Sep} q_i^(1/2) - prod_{i in Sep} q_i^(-1/2)."""
    exponent = system.separating_exponent(separating_set(c1, c2))
    return cyc_root(system.order, exponent) - cyc_root(system.order, -exponent)


@dataclass(frozen=True)
class ChamberPartition:
    """Chambers split into the degree 0, 1 and 2 generators of the complex."""

    base: Chamber
    flag: Tuple[Chamber, ...]
    rest: Tuple[Chamber, ...]

    @property
    def opposite(self) -> Chamber:
        return self.flag[-1]


def partition_chambers(arrangement: NormalizedArrangement, chambers: Sequence[Chamber]) -> ChamberPartition:
    """Partition chambers by the explicit sign vectors of U_0, U_p and U_0^v.

    Raises:
        InvariantViolationError: If an expected chamber does not exist
    """
    n = arrangement.n
    index = chamber_index(chambers)
    wanted = [tuple(-1 for _ in range(n))]
    wanted.extend(tuple(1 if i < p else -1 for i in range(n)) for p in range(1, n))
    wanted.append(tuple(1 for _ in range(n)))

    missing = [w for w in wanted if w not in index]
    if missing:
        labels = ", ".join("".join("+" if s > 0 else "-" for s in w) for w in missing)
        raise InvariantViolationError(
            arrangement.parent.name, f"Normalized arrangement lacks flag chambers {labels}"
        )

    base = index[wanted[0]]
    flag = tuple(index[w] for w in wanted[1:])
    used = set(wanted)
    rest = tuple(c for c in chambers if c.signs not in used)
    return ChamberPartition(base=base, flag=flag, rest=rest)


@dataclass(frozen=True)
class TwistedComplex:
    """The complex C[ch^0] -> C[ch^1] -> C[ch^2] with its differentials."""

    d0: CycMatrix
    d1: CycMatrix
    partition: ChamberPartition
    system: LocalSystem

    @property
    def n(self) -> int:
        return self.d0.rows


def build_complex(
    arrangement: NormalizedArrangement,
    chambers: Sequence[Chamber],
    system: LocalSystem,
) -> TwistedComplex:
    """Assemble d0 (n x 1) and d1 (|ch^2| x n) over Q(zeta_order).

    Column U_p of d1 carries -Delta(U_p, C) on chambers with alpha_p > 0,
    alpha_{p+1} < 0 and +Delta(U_p, C) on chambers with alpha_p < 0,
    alpha_{p+1} > 0; column U_0^v carries -Delta(U_0^v, C) where alpha_n > 0.
    """
    n = arrangement.n
    if system.n != n:
        raise InvalidLocalSystemError(f"{system.n} weights", f"Expected {n} weights")

    partition = partition_chambers(arrangement, chambers)
    order = system.order
    zero = Cyclotomic.zero(order)

    d0 = CycMatrix(n, 1, [delta(partition.base, u, system) for u in partition.flag], order)

    entries = []
    for c in partition.rest:
        for p, u in enumerate(partition.flag):
            if p < n - 1:
                here, after = c.signs[p], c.signs[p + 1]
                if here > 0 and after < 0:
                    entries.append(-delta(u, c, system))
                elif here < 0 and after > 0:
                    entries.append(delta(u, c, system))
                else:
                    entries.append(zero)
            elif c.signs[n - 1] > 0:
                entries.append(-delta(u, c, system))
            else:
                entries.append(zero)
    d1 = CycMatrix(len(partition.rest), n, entries, order)
    return TwistedComplex(d0=d0, d1=d1, partition=partition, system=system)


def cohomology_dims(complex_: TwistedComplex) -> Tuple[int, int, int]:
    """(h0, h1, h2) of the twisted complex.

    Raises:
        InvariantViolationError: If d1 . d0 != 0
    """
    if not (complex_.d1 @ complex_.d0).is_zero():
        raise InvariantViolationError(
            f"order {complex_.system.order}", "d1 . d0 is not zero"
        )
    r0 = complex_.d0.rank()
    r1 = complex_.d1.rank()
    n = complex_.n
    return 1 - r0, n - r1 - r0, complex_.d1.rows - r1


def local_system_cohomology(
    arrangement: NormalizedArrangement,
    system: LocalSystem,
    chambers: Optional[Sequence[Chamber]] = None,
) -> Tuple[int, int, int]:
    if chambers is None:
        chambers = enumerate_chambers(arrangement)
    dims = cohomology_dims(build_complex(arrangement, chambers, system))
    logger.debug(f"{arrangement.parent.name}: {system} -> {dims}")
    return dims
