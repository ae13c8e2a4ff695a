"""Deterministic .arr emission."""

import logging
from pathlib import Path
from typing import List

from src.geometry import ProjArrangement
from src.preprocessing.fields import (
    express_in_generator,
    format_polynomial,
    generator_polynomial,
    isolating_interval,
    real_degree,
)

logger = logging.getLogger(__name__)


class ArrangementWriter:
    """Render a ProjArrangement as .arr text that parses back to equal lines."""

    def format(self, arrangement: ProjArrangement) -> str:
        order = arrangement.field_order
        irrational = any(
            not x.is_rational for line in arrangement for x in line.coefficients
        )

        out: List[str] = [
            f"# {arrangement.name}: {len(arrangement)} lines",
            f"name {arrangement.name}",
        ]
        if irrational and real_degree(order) > 1:
            minimal = format_polynomial(
                list(reversed(generator_polynomial(order).all_coeffs()))
            )
            lo, hi = isolating_interval(order)
            out.append(f"field {minimal} {lo} {hi}")
            out.append(f"# t = 2cos(2pi/{order})")

        for line in arrangement:
            rendered = [
                format_polynomial(express_in_generator(x, order))
                for x in line.coefficients
            ]
            out.append("line " + " ".join(rendered))
        out.append(f"infinity {arrangement.default_infinity}")
        return "\n".join(out) + "\n"

    def write(self, arrangement: ProjArrangement, path) -> None:
        path = Path(path)
        path.write_text(self.format(arrangement), encoding="utf-8")
        logger.info(f"Wrote {arrangement.name} to {path}")


def emit_arrangement(arrangement: ProjArrangement) -> str:
    return ArrangementWriter().format(arrangement)
