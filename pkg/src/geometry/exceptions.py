"""Custom exceptions for arrangement geometry."""


class GeometryError(Exception):
    """Base exception for arrangement geometry errors."""

    def __init__(self, message: str, subject: str):
        self.message = message
        self.subject = subject
        super().__init__(f"{message}: {subject}")


class DegenerateLineError(GeometryError):
    """Raised when a line is given by the zero triple."""

    def __init__(self, subject: str, message: str = "Degenerate line (0, 0, 0)"):
        super().__init__(message, subject)


class DuplicateLineError(GeometryError):
    """Raised when two lines of an arrangement are proportional."""

    def __init__(self, first: int, second: int):
        self.first = first
        self.second = second
        super().__init__("Duplicate line", f"lines {first} and {second} are proportional")


class InvalidArrangementError(GeometryError):
    """Raised when an arrangement violates its structural invariants."""

    def __init__(self, subject: str, message: str = "Invalid arrangement"):
        super().__init__(message, subject)


class NormalizationError(GeometryError):
    """Raised when no admissible normalizing transformation is found."""

    def __init__(self, subject: str, message: str = "Normalization failed"):
        super().__init__(message, subject)
