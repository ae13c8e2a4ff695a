"""Custom exceptions for the eigenspace services."""


class ServiceError(Exception):
    """Base exception for spectrum computations."""

    def __init__(self, message: str, subject: str):
        self.message = message
        self.subject = subject
        super().__init__(f"{message}: {subject}")


class InvariantViolationError(ServiceError):
    """Raised when a mathematical invariant fails; signals a bug, not bad input."""

    def __init__(self, subject: str, message: str = "Invariant violated"):
        super().__init__(message, subject)


class InvalidOrderError(ServiceError):
    """Raised when an eigenvalue order k is not a divisor of |cA| or k < 2."""

    def __init__(self, k: int, lines: int):
        self.k = k
        super().__init__(f"Order {k} must be a divisor > 1 of {lines}", f"k={k}")


class NotResonantError(ServiceError):
    """Raised when a standing wave is requested for a band that is not k-resonant."""

    def __init__(self, band: str, k: int):
        super().__init__(f"Band is not {k}-resonant", band)


class InvalidLocalSystemError(ServiceError):
    """Raised when local system weights do not match the arrangement."""

    def __init__(self, subject: str, message: str = "Invalid local system"):
        super().__init__(message, subject)


class MalformedPartitionError(ServiceError):
    """Raised when multinet classes do not partition the line set."""

    def __init__(self, subject: str, message: str = "Classes do not partition the lines"):
        super().__init__(message, subject)
