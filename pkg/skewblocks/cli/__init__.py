"""Command-line front end: count, verify, series, classify."""

from .main import main
from .parser import build_parser
from .run_config import RunConfig

__all__ = ["main", "build_parser", "RunConfig"]
