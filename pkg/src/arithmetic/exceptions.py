"""Custom exceptions for exact cyclotomic arithmetic."""


class ExactArithmeticError(Exception):
    """Base exception for exact arithmetic errors."""

    def __init__(self, message: str, order: int):
        self.message = message
        self.order = order
        super().__init__(f"{message}: order {order}")


class CyclotomicDivisionError(ExactArithmeticError, ZeroDivisionError):
    """Raised when dividing by the zero element of a cyclotomic field."""

    def __init__(self, order: int, message: str = "Division by zero"):
        super().__init__(message, order)


class NotRealError(ExactArithmeticError):
    """Raised when a real value is requested from a non-real element."""

    def __init__(self, order: int, value: str):
        message = f"Element is not fixed by complex conjugation ({value})"
        super().__init__(message, order)


class PrecisionExhaustedError(ExactArithmeticError):
    """Raised when interval refinement cannot separate a value from zero."""

    def __init__(self, order: int, precision: int):
        message = f"Sign undecided at {precision} bits"
        super().__init__(message, order)


class DimensionMismatchError(ExactArithmeticError):
    """Raised when matrix shapes are incompatible."""

    def __init__(self, order: int, shapes: str):
        message = f"Incompatible matrix shapes {shapes}"
        super().__init__(message, order)
