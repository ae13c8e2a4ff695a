"""Custom exceptions for the arrangement catalogue."""


class CatalogueError(Exception):
    """Base exception for catalogue lookups and constructions."""

    def __init__(self, message: str, name: str):
        self.message = message
        self.name = name
        super().__init__(f"{message}: {name}")


class UnknownEntryError(CatalogueError):
    """Raised when a name matches no catalogue entry."""

    def __init__(self, name: str, message: str = "Unknown catalogue entry"):
        super().__init__(message, name)


class InvalidParameterError(CatalogueError):
    """Raised when a family parameter is out of range, e.g. B(3m) with m = 0."""

    def __init__(self, name: str, message: str = "Invalid family parameter"):
        super().__init__(message, name)


class IncidenceMismatchError(CatalogueError):
    """Raised when a realization does not have its recorded triple points."""

    def __init__(self, name: str, message: str = "Realization does not match its incidence data"):
        super().__init__(message, name)
