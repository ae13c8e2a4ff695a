"""Coordinate fields of .arr files.

A field header names the generator t by its minimal polynomial and an
isolating interval. Supported generators are rationals, 2 cos(2 pi j / L)
for L up to settings.field_search_max_order, and real roots of quadratics.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple

from mpmath import mp
from sympy import QQ, Matrix, Poly, Rational, Symbol, cos, minimal_polynomial, pi, totient

from src.arithmetic import Cyclotomic, RealAlgebraic, sqrt_rational
from src.arithmetic.real import two_cos_turn
from src.config.settings import get_settings

logger = logging.getLogger(__name__)

T = Symbol("t")


def real_degree(order: int) -> int:
    """Degree over Q of the real subfield of Q(zeta_order)."""
    return max(1, int(totient(order)) // 2)


@lru_cache(maxsize=None)
def generator_polynomial(order: int) -> Poly:
    """Minimal polynomial of 2 cos(2 pi / order) in t."""
    return Poly(minimal_polynomial(2 * cos(2 * pi / order), T), T, domain=QQ)


def isolates(poly: Poly, lo: Fraction, hi: Fraction) -> bool:
    return poly.count_roots(Rational(lo.numerator, lo.denominator), Rational(hi.numerator, hi.denominator)) == 1


def resolve_generator(poly: Poly, lo: Fraction, hi: Fraction) -> RealAlgebraic:
    """Exact value of the unique root of poly in [lo, hi].

    Raises:
        ValueError: If the interval does not isolate a root or the root
            does not lie in a supported field
    """
    if lo > hi or not isolates(poly, lo, hi):
        raise ValueError(f"[{lo}, {hi}] does not isolate a root of {poly.as_expr()}")

    monic = poly.monic()
    degree = monic.degree()
    coeffs = [QQ.convert(c) for c in monic.all_coeffs()]

    if degree == 1:
        return RealAlgebraic.rational(-coeffs[1])

    for order in range(3, get_settings().field_search_max_order + 1):
        if real_degree(order) != degree:
            continue
        if generator_polynomial(order).monic() != monic:
            continue
        for j in range(1, order // 2 + 1):
            if gcd(j, order) != 1:
                continue
            value = 2 * mp.cos(2 * mp.pi * j / order)
            if lo <= Fraction(str(value)) <= hi:
                logger.debug(f"Field generator identified as 2cos(2pi*{j}/{order})")
                return two_cos_turn(order, j)

    if degree == 2:
        _, p, q = coeffs
        root = sqrt_rational(p * p / 4 - q)
        for candidate in (root - p / 2, -root - p / 2):
            if lo <= _midpoint(candidate) <= hi:
                return candidate

    raise ValueError(f"Unsupported field generator with minimal polynomial {poly.as_expr()}")


def _midpoint(value: RealAlgebraic) -> Fraction:
    lo, hi = value.enclosure(128)
    mid = (lo + hi) / 2
    return Fraction(int(mid.numerator), int(mid.denominator))


def express_in_generator(value: RealAlgebraic, order: int) -> List:
    """Rational coefficients c_i with value = sum c_i (2 cos(2 pi / order))^i.

    Args:
        value: Element of the real subfield of Q(zeta_order)
        order: Field order of the arrangement the value belongs to

    Returns:
        Ascending QQ coefficients of length real_degree(order)
    """
    degree = real_degree(order)
    if degree == 1 or value.is_rational:
        if not value.is_rational:
            raise ValueError(f"{value} is not rational")
        return [value.rational_value()] + [QQ(0)] * (degree - 1)

    generator = two_cos_turn(order, 1).value
    power = Cyclotomic.one(order)
    columns = []
    for _ in range(degree):
        columns.append([QQ.to_sympy(c) for c in power.coeffs])
        power = power * generator
    system = Matrix(columns).T
    target = Matrix([QQ.to_sympy(c) for c in value.value.lift(order).coeffs])
    solution, params = system.gauss_jordan_solve(target)
    if params.shape[0]:
        raise ValueError(f"Ambiguous representation of {value}")
    return [QQ.from_sympy(c) for c in solution]


def format_rational(q) -> str:
    q = QQ.convert(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_polynomial(coeffs: Sequence) -> str:
    """Whitespace-free rendering of sum coeffs[i] t^i, highest degree first."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = QQ.convert(coeffs[power])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if power == 0:
            body = format_rational(magnitude)
        else:
            monomial = "t" if power == 1 else f"t^{power}"
            body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"
        terms.append((sign, body))
    if not terms:
        return "0"
    text = "".join(f"{sign}{body}" for sign, body in terms)
    return text[1:] if text.startswith("+") else text


def isolating_interval(order: int) -> Tuple[str, str]:
    """Shortest decimal interval around 2 cos(2 pi / order) isolating it.

    Returns:
        Tuple (lo, hi) of decimal strings
    """
    poly = generator_polynomial(order)
    value = mp.mpf(2) * mp.cos(2 * mp.pi / order)
    places = 1
    while True:
        scale = 10 ** places
        center = int(mp.floor(value * scale))
        if isolates(poly, Fraction(center, scale), Fraction(center + 1, scale)):
            return _decimal(center, places), _decimal(center + 1, places)
        places += 1


def _decimal(scaled: int, places: int) -> str:
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** places)
    return f"{sign}{whole}.{str(frac).zfill(places)}"
