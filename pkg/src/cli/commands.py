"""Command line entry points.

Exit status 0 on success, 1 for invalid input, 2 when a mathematical
invariant fails during a computation.
"""

import argparse
import logging
import sys
from typing import Callable, List, Optional

from pydantic import BaseModel

from src.arithmetic import ExactArithmeticError
from src.catalogue import CATALOGUE_NAMES, CatalogueError, list_entries, named
from src.geometry import GeometryError, ProjArrangement
from src.models.schemas import BandsReport, BoundsReport, ChambersReport, OracleReport, SpectrumReport
from src.preprocessing import ArrangementFileError, ArrangementParser, emit_arrangement
from src.services.conjecture import conjecture_row
from src.services.exceptions import InvariantViolationError, ServiceError
from src.services.report_service import ReportService
from src.services.resonant_bands import check_order
from src.services.spectrum_service import get_spectrum_service
from src.services.svg_renderer import SvgRenderer

logger = logging.getLogger(__name__)

CATALOGUE_PREFIX = "catalogue:"


def load_arrangement(source: str) -> ProjArrangement:
    """Read FILE, or build a catalogue entry given as catalogue:NAME."""
    if source.startswith(CATALOGUE_PREFIX):
        return named(source[len(CATALOGUE_PREFIX):]).arrangement
    return ArrangementParser().parse_file(source)


def _emit(report: BaseModel, as_json: bool, render: Callable[[BaseModel], str]) -> None:
    print(report.model_dump_json(indent=2) if as_json else render(report))


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


# text renderings

def format_spectrum(report: SpectrumReport) -> str:
    out = [
        f"{report.name}: {report.lines} lines, H_infinity = line {report.infinity_index}, "
        f"{report.chambers} chambers ({report.bounded_chambers} bounded), {report.bands} bands",
        f"{'k':>4}  {'|RB_k|':>6}  {'dim':>3}  {'bound':<9}  certificates",
    ]
    for row in report.divisors:
        certificates = []
        if row.sharp_pair:
            certificates.append(f"sharp pair {tuple(row.sharp_pair)}")
        if row.multinet:
            certificates.append("multinet " + " | ".join(",".join(map(str, c)) for c in row.multinet))
        certificates.extend(row.criteria)
        if row.per_root:
            certificates.append(f"per root {row.per_root}")
        out.append(
            f"{row.k:>4}  {row.resonant_bands:>6}  {row.dimension:>3}  {row.upper_bound:<9}  "
            + "; ".join(certificates)
        )
    out.append(f"b1 = {report.b1}, pure-tone: {_yes(report.pure_tone)}")
    if report.timings:
        out.append("timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in report.timings.items()))
    return "\n".join(out)


def format_chambers(report: ChambersReport) -> str:
    out = [f"{report.name}: {report.count} chambers, {report.bounded} bounded; lines {report.lines}"]
    out.extend(f"  {c.label}  {'bounded' if c.bounded else 'unbounded'}" for c in report.chambers)
    return "\n".join(out)


def format_bands(report: BandsReport) -> str:
    out = [f"{report.name}: k={report.k}, {report.resonant_count} resonant bands, dim = {report.dimension}"]
    for band in report.bands:
        out.append(
            f"  {band.label}: lines {band.lower},{band.upper}  length {band.length}  "
            f"resonant {_yes(band.resonant)}"
        )
        for label, value in (band.wave or {}).items():
            out.append(f"      {label}  {value}")
    for vector in report.relations:
        out.append("  relation (" + ", ".join(vector) + ")")
    return "\n".join(out)


def format_oracle(report: OracleReport) -> str:
    return f"{report.name}: (h0, h1, h2) = ({report.h0}, {report.h1}, {report.h2})"


def format_bounds(report: BoundsReport) -> str:
    out = [
        f"{report.name}: k={report.k}, dim = {report.dimension}, upper bound {report.upper_bound}"
        + (f" via sharp pair {tuple(report.sharp_pair)}" if report.sharp_pair else ""),
        f"  sharp pairs: {report.sharp_pairs}",
        f"  multinets: {len(report.multinets)}"
        + ("" if report.multinet_search_exhaustive else " (search truncated)"),
    ]
    for classes in report.multinets:
        out.append("    " + " | ".join(",".join(map(str, c)) for c in classes))
    out.append("  criteria: " + (", ".join(report.criteria) or "none"))
    out.append(f"  vanishing lines: {report.vanishing_lines}")
    for violation in report.violations:
        out.append(f"  VIOLATION: {violation}")
    return "\n".join(out)


# commands

def _spectrum_command(args: argparse.Namespace) -> int:
    report = ReportService().spectrum(
        load_arrangement(args.file),
        args.file,
        args.infinity,
        timings=args.timings,
        multinet_budget=args.multinet_budget,
    )
    _emit(report, args.json, format_spectrum)
    return 0


def _chambers_command(args: argparse.Namespace) -> int:
    report = ReportService().chambers(load_arrangement(args.file), args.infinity)
    _emit(report, args.json, format_chambers)
    return 0


def _bands_command(args: argparse.Namespace) -> int:
    report = ReportService().bands(load_arrangement(args.file), args.k, args.infinity)
    _emit(report, args.json, format_bands)
    return 0


def _oracle_command(args: argparse.Namespace) -> int:
    try:
        weights = [int(w) for w in args.weights.split(",")]
    except ValueError:
        print(f"Error: weights must be comma-separated integers: {args.weights}", file=sys.stderr)
        return 1
    report = ReportService().oracle(load_arrangement(args.file), weights, args.order, args.infinity)
    _emit(report, args.json, format_oracle)
    return 0


def _bounds_command(args: argparse.Namespace) -> int:
    report = ReportService().bounds(
        load_arrangement(args.file), args.k, args.infinity, args.multinet_budget
    )
    _emit(report, args.json, format_bounds)
    return 2 if report.violations else 0


def _catalogue_list_command(args: argparse.Namespace) -> int:
    listing = ReportService.catalogue(list_entries())
    text = "\n".join(
        f"{e.name:<14} {e.lines:>3} lines  order {e.field_order:<4} {e.description}"
        for e in listing.entries
    )
    _emit(listing, args.json, lambda _: text)
    return 0


def _catalogue_emit_command(args: argparse.Namespace) -> int:
    text = emit_arrangement(named(args.name).arrangement)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _catalogue_conjecture_command(args: argparse.Namespace) -> int:
    service = get_spectrum_service()
    names = args.names or list(CATALOGUE_NAMES)
    rows = [
        conjecture_row(named(name).arrangement, service, budget=args.multinet_budget)
        for name in names
    ]
    report = ReportService.conjecture(rows)
    text = "\n".join(
        f"{r.name:<14} simplicial {_yes(r.simplicial):<5}  "
        + "  ".join(f"({key}) {_yes(value):<5}" for key, value in row.statements.items())
        + ("" if r.consistent else "  INCONSISTENT")
        for r, row in zip(report.rows, rows)
    )
    _emit(report, args.json, lambda _: text)
    return 0 if all(r.consistent for r in rows) else 2


def _svg_command(args: argparse.Namespace) -> int:
    prepared = get_spectrum_service().prepare(load_arrangement(args.file), args.infinity)
    if args.k is not None:
        check_order(args.k, prepared.n + 1)
    SvgRenderer().write(prepared, args.output, args.k)
    return 0


def _add_input_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Path to an .arr file, or catalogue:NAME")
    parser.add_argument("--infinity", type=int, default=None, help="Line of cA sent to infinity")
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrangement-spectrum",
        description="Milnor fiber monodromy eigenspaces of real line arrangements.",
    )
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    spectrum = subparsers.add_parser("spectrum", help="Eigenspace dimensions for every divisor of |cA|")
    _add_input_args(spectrum)
    spectrum.add_argument("--timings", action="store_true", help="Include wall-clock timings")
    spectrum.add_argument("--multinet-budget", type=int, default=None)
    spectrum.set_defaults(func=_spectrum_command)

    bands = subparsers.add_parser("bands", help="Bands, resonance and standing waves")
    _add_input_args(bands)
    bands.add_argument("-k", type=int, required=True)
    bands.set_defaults(func=_bands_command)

    chambers = subparsers.add_parser("chambers", help="Chamber sign vectors")
    _add_input_args(chambers)
    chambers.set_defaults(func=_chambers_command)

    oracle = subparsers.add_parser("oracle", help="Local system cohomology from the minimal complex")
    _add_input_args(oracle)
    oracle.add_argument("--weights", required=True, help="e1,...,en for the affine lines in file order")
    oracle.add_argument("--order", type=int, required=True, help="M with q_i = zeta_M^(2 e_i)")
    oracle.set_defaults(func=_oracle_command)

    bounds = subparsers.add_parser("bounds", help="Multinet and sharp-pair certificates")
    _add_input_args(bounds)
    bounds.add_argument("-k", type=int, required=True)
    bounds.add_argument("--multinet-budget", type=int, default=None)
    bounds.set_defaults(func=_bounds_command)

    catalogue = subparsers.add_parser("catalogue", help="Named arrangements")
    actions = catalogue.add_subparsers(dest="action", required=True)
    listing = actions.add_parser("list", help="List catalogue entries")
    listing.add_argument("--json", action="store_true")
    listing.set_defaults(func=_catalogue_list_command)
    emit = actions.add_parser("emit", help="Write an entry as .arr")
    emit.add_argument("name")
    emit.add_argument("-o", "--output", default=None)
    emit.set_defaults(func=_catalogue_emit_command)
    conjecture = actions.add_parser("conjecture", help="Check the pure-tone characterization")
    conjecture.add_argument("names", nargs="*")
    conjecture.add_argument("--multinet-budget", type=int, default=None)
    conjecture.add_argument("--json", action="store_true")
    conjecture.set_defaults(func=_catalogue_conjecture_command)

    svg = subparsers.add_parser("svg", help="Render the deconed arrangement as SVG")
    svg.add_argument("file", help="Path to an .arr file, or catalogue:NAME")
    svg.add_argument("-o", "--output", required=True)
    svg.add_argument("-k", type=int, default=None)
    svg.add_argument("--infinity", type=int, default=None)
    svg.set_defaults(func=_svg_command)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch, and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())
    try:
        return int(args.func(args))
    except (InvariantViolationError, ExactArithmeticError) as e:
        logger.error(f"Invariant violation: {str(e)}")
        print(f"Internal error: {e}", file=sys.stderr)
        return 2
    except (ArrangementFileError, GeometryError, CatalogueError, ServiceError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
