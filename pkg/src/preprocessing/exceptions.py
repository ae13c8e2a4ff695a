"""Custom exceptions for arrangement file handling."""


class ArrangementFileError(Exception):
    """Base exception for .arr file errors."""

    def __init__(self, message: str, source: str):
        self.message = message
        self.source = source
        super().__init__(f"{message}: {source}")


class ParseError(ArrangementFileError):
    """Raised when a directive cannot be parsed."""

    def __init__(self, source: str, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(message, f"{source}:{line}:{column}")


class UnsupportedFieldError(ArrangementFileError):
    """Raised when a field header does not describe a real cyclotomic subfield."""

    def __init__(self, source: str, polynomial: str):
        message = f"Unsupported coordinate field {polynomial}"
        super().__init__(message, source)


class UndecodableFileError(ArrangementFileError):
    """Raised when the file bytes cannot be decoded as text."""

    def __init__(self, source: str, message: str = "File could not be decoded"):
        super().__init__(message, source)
