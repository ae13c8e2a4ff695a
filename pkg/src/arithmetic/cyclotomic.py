"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element of Q(zeta_M) is stored as its residue modulo the M-th cyclotomic
polynomial, in the power basis 1, zeta, ..., zeta^(phi(M)-1). Operands of
different orders are lifted to the lcm of their orders through
zeta_M = zeta_L^(L/M).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import List, Sequence, Tuple, Union

from mpmath import mp
from sympy import QQ, ZZ, Poly, Symbol, mobius, sympify, totient
from sympy.polys.densearith import dup_rem
from sympy.polys.densebasic import dup_convert, dup_inflate, dup_strip
from sympy.polys.factortools import dup_zz_cyclotomic_poly
from sympy.polys.polyclasses import ANP

from src.arithmetic.exceptions import CyclotomicDivisionError

Rational = type(QQ(1))
Scalar = Union[int, Fraction, Rational]


def to_rational(value) -> Rational:
    """Convert an integer, Fraction, sympy number or QQ element to QQ."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.from_sympy(sympify(value))


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> Tuple[Rational, ...]:
    """Dense coefficients (highest degree first) of Phi_order over QQ."""
    return tuple(dup_convert(dup_zz_cyclotomic_poly(order, ZZ), ZZ, QQ))


@lru_cache(maxsize=None)
def _trace_weights(order: int) -> Tuple[Rational, ...]:
    # Tr(zeta^j) / phi(M) = mu(M/g) / phi(M/g) with g = gcd(j, M)
    weights = []
    for j in range(int(totient(order))):
        quotient = order // gcd(j, order)
        weights.append(QQ(int(mobius(quotient)), int(totient(quotient))))
    return tuple(weights)


class Cyclotomic:
    """Immutable element of the cyclotomic field Q(zeta_order)."""

    __slots__ = ("order", "_anp", "_hash")

    def __init__(self, order: int, rep: Sequence = ()):
        """Build an element from dense coefficients.

        Args:
            order: The order M of the root of unity zeta_M
            rep: Coefficients in x = zeta_M, highest degree first; any
                degree is accepted and reduced modulo Phi_M
        """
        if order < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {order}")
        modulus = list(cyclotomic_modulus(order))
        reduced = dup_rem(dup_strip([to_rational(c) for c in rep]), modulus, QQ)
        self.order = order
        self._anp = ANP(reduced, modulus, QQ)
        self._hash = None

    @classmethod
    def _from_anp(cls, order: int, anp: ANP) -> "Cyclotomic":
        element = cls.__new__(cls)
        element.order = order
        element._anp = anp
        element._hash = None
        return element

    @classmethod
    def from_coefficients(cls, order: int, coeffs: Sequence) -> "Cyclotomic":
        """Build an element from power-basis coefficients 1, zeta, zeta^2, ..."""
        return cls(order, list(reversed(list(coeffs))))

    @classmethod
    def rational(cls, value, order: int = 1) -> "Cyclotomic":
        return cls(order, [to_rational(value)])

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclotomic":
        return cls(order, [])

    @classmethod
    def one(cls, order: int = 1) -> "Cyclotomic":
        return cls(order, [QQ(1)])

    # representation

    @property
    def degree(self) -> int:
        """Degree of the field over Q."""
        return len(cyclotomic_modulus(self.order)) - 1

    @property
    def coeffs(self) -> Tuple[Rational, ...]:
        """Power-basis coefficients, lowest degree first, of length phi(M)."""
        ascending = list(reversed(self._anp.to_list()))
        ascending.extend([QQ(0)] * (self.degree - len(ascending)))
        return tuple(ascending)

    @property
    def is_zero(self) -> bool:
        return not self._anp

    @property
    def is_rational(self) -> bool:
        return len(self._anp.to_list()) <= 1

    def rational_value(self) -> Rational:
        """Return the value as QQ; the element must be rational."""
        rep = self._anp.to_list()
        if len(rep) > 1:
            raise ValueError(f"{self} is not rational")
        return rep[0] if rep else QQ(0)

    def lift(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Cannot lift order {self.order} to {order}")
        rep = dup_inflate(self._anp.to_list(), order // self.order, QQ)
        return Cyclotomic(order, rep)

    def galois(self, exponent: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^exponent (exponent coprime to M)."""
        if gcd(exponent, self.order) != 1:
            raise ValueError(
                f"Exponent {exponent} is not a unit modulo {self.order}"
            )
        dense: List[Rational] = [QQ(0)] * self.order
        for j, c in enumerate(self.coeffs):
            if c:
                dense[(j * exponent) % self.order] += c
        return Cyclotomic(self.order, list(reversed(dense)))

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def trace(self) -> Rational:
        """Normalized trace Tr(a)/[Q(zeta_M):Q]; invariant under lifting."""
        total = QQ(0)
        for c, w in zip(self.coeffs, _trace_weights(self.order)):
            if c and w:
                total += c * w
        return total

    def to_complex(self, prec: int = 53):
        """Numeric value as an mpmath complex number."""
        with mp.workprec(prec):
            total = mp.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    scale = mp.mpf(int(c.numerator)) / int(c.denominator)
                    total += scale * mp.expjpi(mp.mpf(2 * j) / self.order)
            return total

    # arithmetic

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Cyclotomic.rational(other, self.order)
        return None

    @staticmethod
    def _unify(a: "Cyclotomic", b: "Cyclotomic") -> Tuple["Cyclotomic", "Cyclotomic"]:
        if a.order == b.order:
            return a, b
        order = lcm(a.order, b.order)
        return a.lift(order), b.lift(order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._unify(self, other)
        return Cyclotomic._from_anp(a.order, a._anp + b._anp)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._unify(self, other)
        return Cyclotomic._from_anp(a.order, a._anp - b._anp)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._unify(self, other)
        return Cyclotomic._from_anp(a.order, a._anp * b._anp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise CyclotomicDivisionError(other.order)
        a, b = self._unify(self, other)
        return Cyclotomic._from_anp(a.order, a._anp / b._anp)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Cyclotomic._from_anp(self.order, -self._anp)

    def __pow__(self, exponent: int):
        if exponent < 0 and self.is_zero:
            raise CyclotomicDivisionError(self.order)
        return Cyclotomic._from_anp(self.order, self._anp ** exponent)

    def inverse(self) -> "Cyclotomic":
        return Cyclotomic.one(self.order) / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._unify(self, other)
        return a._anp == b._anp

    def __hash__(self):
        # rationals compare equal to int and Fraction, so they hash like them
        if self._hash is None:
            if self.is_rational:
                q = self.rational_value()
                self._hash = hash(Fraction(int(q.numerator), int(q.denominator)))
            else:
                self._hash = hash(("Cyclotomic", self.trace()))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    def to_expr(self):
        """Sympy expression in the symbol zeta<M>."""
        zeta = Symbol(f"zeta{self.order}")
        rep = [QQ.to_sympy(c) for c in self._anp.to_list()]
        if not rep:
            return sympify(0)
        return Poly(rep, zeta).as_expr()

    def __str__(self):
        return str(self.to_expr())

    def __repr__(self):
        coeffs = ", ".join(str(c) for c in self.coeffs)
        return f"Cyclotomic({self.order}, [{coeffs}])"


@lru_cache(maxsize=4096)
def cyc_root(order: int, exponent: int) -> Cyclotomic:
    """Return zeta_order^exponent in canonical form."""
    if order < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {order}")
    return Cyclotomic(order, [QQ(1)] + [QQ(0)] * (exponent % order))


def common_order(values) -> int:
    """Least common multiple of the orders of the given elements."""
    order = 1
    for value in values:
        order = lcm(order, value.order)
    return order
