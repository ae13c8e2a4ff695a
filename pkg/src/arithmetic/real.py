"""Real algebraic numbers living in real subfields of cyclotomic fields.

Zero tests are exact. Signs of nonzero values are decided by evaluating
sum_j a_j cos(2 pi j / M) in interval arithmetic, doubling the working
precision until the enclosure excludes zero.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from mpmath import iv
from mpmath.libmp import to_rational as mpf_to_rational
from sympy import QQ, factorint, legendre_symbol

from src.arithmetic.cyclotomic import Cyclotomic, Rational, cyc_root, to_rational
from src.arithmetic.exceptions import NotRealError, PrecisionExhaustedError
from src.config.settings import get_settings

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _cos_table(order: int, prec: int) -> tuple:
    saved = iv.prec
    iv.prec = prec
    try:
        degree = len(Cyclotomic.one(order).coeffs)
        return tuple(iv.cos(2 * iv.pi * j / order) for j in range(degree))
    finally:
        iv.prec = saved


def enclosure(value: Cyclotomic, prec: int) -> Tuple[Rational, Rational]:
    """Rational interval containing the real part of value.

    Args:
        value: Element of Q(zeta_M); for real elements this is the value itself
        prec: Working precision in bits

    Returns:
        Tuple (lo, hi) of QQ endpoints with lo <= Re(value) <= hi
    """
    table = _cos_table(value.order, prec)
    saved = iv.prec
    iv.prec = prec
    try:
        total = iv.mpf(0)
        for c, cos_value in zip(value.coeffs, table):
            if c:
                total += iv.mpf(int(c.numerator)) / int(c.denominator) * cos_value
        lo, hi = total._mpi_
    finally:
        iv.prec = saved
    return QQ(*mpf_to_rational(lo)), QQ(*mpf_to_rational(hi))


def real_sign(value: Cyclotomic, initial_precision: int = None) -> int:
    """Exact sign of a real cyclotomic element: -1, 0 or +1."""
    if value.is_zero:
        return 0
    if value.is_rational:
        return 1 if value.rational_value() > 0 else -1

    settings = get_settings()
    prec = initial_precision or settings.interval_initial_precision
    while prec <= settings.interval_max_precision:
        lo, hi = enclosure(value, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        logger.debug(f"Refining sign of {value} beyond {prec} bits")
        prec *= 2
    raise PrecisionExhaustedError(value.order, prec // 2)


class RealAlgebraic:
    """A real element of a cyclotomic field with exact ordering."""

    __slots__ = ("value",)

    def __init__(self, value, check: bool = True):
        if not isinstance(value, Cyclotomic):
            value = Cyclotomic.rational(value)
        if check and value.conjugate() != value:
            raise NotRealError(value.order, str(value))
        self.value = value

    @classmethod
    def _wrap(cls, value: Cyclotomic) -> "RealAlgebraic":
        element = cls.__new__(cls)
        element.value = value
        return element

    @classmethod
    def rational(cls, value, order: int = 1) -> "RealAlgebraic":
        return cls._wrap(Cyclotomic.rational(value, order))

    @property
    def order(self) -> int:
        return self.value.order

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    @property
    def is_rational(self) -> bool:
        return self.value.is_rational

    def rational_value(self) -> Rational:
        return self.value.rational_value()

    def lift(self, order: int) -> "RealAlgebraic":
        return RealAlgebraic._wrap(self.value.lift(order))

    def sign(self, initial_precision: int = None) -> int:
        return real_sign(self.value, initial_precision)

    def enclosure(self, prec: int = 64) -> Tuple[Rational, Rational]:
        return enclosure(self.value, prec)

    def __float__(self) -> float:
        if self.is_rational:
            q = self.rational_value()
            return int(q.numerator) / int(q.denominator)
        lo, hi = self.enclosure(64)
        mid = (lo + hi) / 2
        return int(mid.numerator) / int(mid.denominator)

    # arithmetic

    @staticmethod
    def _operand(other):
        if isinstance(other, RealAlgebraic):
            return other.value
        if isinstance(other, (int, Fraction, Rational)):
            return to_rational(other)
        return None

    def _binary(self, other, op):
        if isinstance(other, Cyclotomic):
            return op(self.value, other)
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return RealAlgebraic._wrap(op(self.value, operand))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        return RealAlgebraic._wrap(-self.value)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int):
        return RealAlgebraic._wrap(self.value ** exponent)

    # comparisons

    def _compare(self, other) -> int:
        operand = self._operand(other)
        if operand is None:
            raise TypeError(f"Cannot compare RealAlgebraic with {type(other).__name__}")
        return real_sign(self.value - operand)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.value == other
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        return self.value == operand

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"RealAlgebraic({self.value!r})"


def two_cos_turn(order: int, exponent: int) -> RealAlgebraic:
    """Return 2 cos(2 pi exponent / order) = zeta^e + zeta^-e."""
    return RealAlgebraic._wrap(cyc_root(order, exponent) + cyc_root(order, -exponent))


def cos_turn(order: int, exponent: int) -> RealAlgebraic:
    """Return cos(2 pi exponent / order)."""
    return two_cos_turn(order, exponent) / 2


def sin_turn(order: int, exponent: int) -> RealAlgebraic:
    """Return sin(2 pi exponent / order) as a cosine of a shifted angle."""
    if order % 4 == 0:
        return cos_turn(order, exponent - order // 4)
    return cos_turn(4 * order, 4 * exponent - order)


@lru_cache(maxsize=None)
def _sqrt_prime(prime: int) -> Cyclotomic:
    if prime == 2:
        return cyc_root(8, 1) + cyc_root(8, 7)
    # quadratic Gauss sum: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4
    gauss = Cyclotomic.zero(prime)
    for a in range(1, prime):
        gauss = gauss + cyc_root(prime, a) * int(legendre_symbol(a, prime))
    if prime % 4 == 1:
        return gauss
    return -(cyc_root(4, 1) * gauss)


def sqrt_rational(value) -> RealAlgebraic:
    """Positive square root of a non-negative rational, exactly."""
    q = to_rational(value)
    if q < 0:
        raise ValueError(f"Cannot take the real square root of {q}")
    if not q:
        return RealAlgebraic.rational(0)
    radicand = int(q.numerator) * int(q.denominator)
    square, free = 1, []
    for prime, exponent in sorted(factorint(radicand).items()):
        square *= prime ** (exponent // 2)
        if exponent % 2:
            free.append(prime)
    root = Cyclotomic.one()
    for prime in free:
        root = root * _sqrt_prime(prime)
    return RealAlgebraic._wrap(root * QQ(square, int(q.denominator)))
