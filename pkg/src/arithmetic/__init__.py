"""Exact arithmetic in cyclotomic fields and their real subfields."""

from src.arithmetic.cyclotomic import Cyclotomic, cyc_root, to_rational
from src.arithmetic.exceptions import (
    CyclotomicDivisionError,
    DimensionMismatchError,
    ExactArithmeticError,
    NotRealError,
    PrecisionExhaustedError,
)
from src.arithmetic.linalg import CycMatrix, Kernel, kernel
from src.arithmetic.real import RealAlgebraic, real_sign, sqrt_rational

__all__ = [
    "Cyclotomic",
    "CycMatrix",
    "Kernel",
    "RealAlgebraic",
    "cyc_root",
    "kernel",
    "real_sign",
    "sqrt_rational",
    "to_rational",
    "ExactArithmeticError",
    "CyclotomicDivisionError",
    "DimensionMismatchError",
    "NotRealError",
    "PrecisionExhaustedError",
]
