"""Reading and writing .arr arrangement files."""

from src.preprocessing.exceptions import (
    ArrangementFileError,
    ParseError,
    UndecodableFileError,
    UnsupportedFieldError,
)
from src.preprocessing.parser import ArrangementParser, parse_arrangement
from src.preprocessing.writer import ArrangementWriter, emit_arrangement

__all__ = [
    "ArrangementParser",
    "ArrangementWriter",
    "parse_arrangement",
    "emit_arrangement",
    "ArrangementFileError",
    "ParseError",
    "UndecodableFileError",
    "UnsupportedFieldError",
]
