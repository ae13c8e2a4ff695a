"""Exact constructions of named line arrangements."""

from src.catalogue.entries import (
    CATALOGUE_NAMES,
    EXPECTED,
    CatalogueEntry,
    Expected,
    check_incidences,
    list_entries,
    named,
)
from src.catalogue.exceptions import (
    CatalogueError,
    IncidenceMismatchError,
    InvalidParameterError,
    UnknownEntryError,
)
from src.catalogue.polygons import a2n1, b3m, polygon_sides

__all__ = [
    "CATALOGUE_NAMES",
    "EXPECTED",
    "CatalogueEntry",
    "Expected",
    "a2n1",
    "b3m",
    "check_incidences",
    "list_entries",
    "named",
    "polygon_sides",
    "CatalogueError",
    "IncidenceMismatchError",
    "InvalidParameterError",
    "UnknownEntryError",
]
