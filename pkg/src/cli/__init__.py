from src.cli.commands import build_parser, load_arrangement, run

__all__ = ["build_parser", "load_arrangement", "run"]
