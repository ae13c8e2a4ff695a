"""Parsing of .arr arrangement files.

Format, one directive per line, `#` starts a comment:

    name <identifier>
    field <polynomial in t> <lo> <hi>
    line <a> <b> <c>
    infinity [<index>]

Coefficients are polynomial expressions in t with rational coefficients
and no whitespace. A bare `infinity` appends the line z = 0 and makes it
the line at infinity; `infinity <index>` designates an existing line.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from sympy import QQ, Poly
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    rationalize,
    standard_transformations,
)

from src.arithmetic import RealAlgebraic
from src.geometry import DegenerateLineError, ProjArrangement, ProjLine
from src.preprocessing.exceptions import (
    ParseError,
    UndecodableFileError,
    UnsupportedFieldError,
)
from src.preprocessing.fields import T, resolve_generator

logger = logging.getLogger(__name__)

EXPRESSION_PATTERN = re.compile(r"^[0-9t+\-*/^().]+$")
TOKEN_PATTERN = re.compile(r"\S+")
TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)


class ArrangementParser:
    """Parse .arr text into a ProjArrangement."""

    def parse_file(self, path) -> ProjArrangement:
        path = Path(path)
        return self.parse_bytes(path.read_bytes(), str(path), default_name=path.stem)

    def parse_bytes(
        self, data: bytes, source: str, default_name: Optional[str] = None
    ) -> ProjArrangement:
        """Decode file bytes and parse them.

        Args:
            data: The raw file bytes
            source: Name used in error messages
            default_name: Arrangement name when the file has no name directive

        Returns:
            The parsed ProjArrangement
        """
        # Try UTF-8 first, fall back to Latin-1
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            try:
                text = data.decode("latin-1")
            except UnicodeDecodeError as e:
                raise UndecodableFileError(source, f"Failed to decode: {str(e)}")
        return self.parse(text, source, default_name)

    def parse(
        self, text: str, source: str = "<string>", default_name: Optional[str] = None
    ) -> ProjArrangement:
        """Parse .arr text.

        Raises:
            ParseError: On malformed directives or coefficients
            UnsupportedFieldError: If the field header cannot be resolved
            DegenerateLineError: On a zero triple
            DuplicateLineError: On proportional lines
            InvalidArrangementError: On fewer than 3 lines
        """
        name = default_name or "arrangement"
        generator: Optional[RealAlgebraic] = None
        lines: List[ProjLine] = []
        infinity: Optional[int] = None
        seen_infinity = False

        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split("#", 1)[0]
            tokens = [(m.group(), m.start() + 1) for m in TOKEN_PATTERN.finditer(content)]
            if not tokens:
                continue
            directive, column = tokens[0]

            if directive == "name":
                if len(tokens) != 2:
                    raise ParseError(source, number, column, "name takes one identifier")
                name = tokens[1][0]

            elif directive == "field":
                if lines or generator is not None:
                    raise ParseError(source, number, column, "field must precede all lines")
                if len(tokens) < 4:
                    raise ParseError(source, number, column, "field needs a polynomial and an interval")
                generator = self._parse_field(tokens, source, number)

            elif directive == "line":
                if len(tokens) != 4:
                    raise ParseError(source, number, column, "line takes exactly 3 coefficients")
                coefficients = [
                    self._parse_coefficient(token, col, generator, source, number)
                    for token, col in tokens[1:]
                ]
                try:
                    lines.append(ProjLine(*coefficients))
                except DegenerateLineError:
                    raise DegenerateLineError(f"{source}:{number}")

            elif directive == "infinity":
                if seen_infinity:
                    raise ParseError(source, number, column, "infinity may appear only once")
                seen_infinity = True
                if len(tokens) == 1:
                    lines.append(ProjLine(0, 0, 1))
                    infinity = len(lines) - 1
                elif len(tokens) == 2 and tokens[1][0].isdigit():
                    infinity = int(tokens[1][0])
                else:
                    raise ParseError(source, number, column, "infinity takes an optional line index")

            else:
                raise ParseError(source, number, column, f"Unknown directive {directive!r}")

        if infinity is not None and infinity >= len(lines):
            raise ParseError(source, 0, 0, f"infinity index {infinity} exceeds line count {len(lines)}")

        arrangement = ProjArrangement(lines, name=name, default_infinity=infinity)
        logger.info(f"Parsed {len(arrangement)} lines from {source}")
        return arrangement

    def _parse_field(self, tokens: List[Tuple[str, int]], source: str, number: int) -> RealAlgebraic:
        polynomial = "".join(token for token, _ in tokens[1:-2])
        poly = self._parse_polynomial(polynomial, tokens[1][1], source, number)
        try:
            lo = Fraction(tokens[-2][0])
            hi = Fraction(tokens[-1][0])
        except (ValueError, ZeroDivisionError):
            raise ParseError(source, number, tokens[-2][1], "Malformed isolating interval")
        if poly.degree() < 1:
            raise ParseError(source, number, tokens[1][1], "Field polynomial must be non-constant")
        try:
            return resolve_generator(poly, lo, hi)
        except ValueError as e:
            logger.warning(f"{source}:{number}: {str(e)}")
            raise UnsupportedFieldError(f"{source}:{number}", polynomial)

    def _parse_polynomial(self, token: str, column: int, source: str, number: int) -> Poly:
        if not EXPRESSION_PATTERN.match(token):
            raise ParseError(source, number, column, f"Invalid characters in {token!r}")
        try:
            expr = parse_expr(token, local_dict={"t": T}, transformations=TRANSFORMATIONS)
            return Poly(expr, T, domain=QQ)
        except Exception as e:
            raise ParseError(source, number, column, f"Malformed expression {token!r}: {str(e)}")

    def _parse_coefficient(
        self,
        token: str,
        column: int,
        generator: Optional[RealAlgebraic],
        source: str,
        number: int,
    ) -> RealAlgebraic:
        poly = self._parse_polynomial(token, column, source, number)
        coeffs = [QQ.convert(c) for c in reversed(poly.all_coeffs())]
        if len(coeffs) == 1:
            return RealAlgebraic.rational(coeffs[0])
        if generator is None:
            raise ParseError(source, number, column, "t used without a field header")
        value = RealAlgebraic.rational(0)
        power = RealAlgebraic.rational(1)
        for c in coeffs:
            if c:
                value = value + power * c
            power = power * generator
        return value


def parse_arrangement(text: str, source: str = "<string>") -> ProjArrangement:
    return ArrangementParser().parse(text, source)
