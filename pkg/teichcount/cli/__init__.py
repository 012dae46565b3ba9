"""
Command-line interface
"""

from .main import build_parser, run
from .error_handler import CliErrorHandler, EXIT_OK, EXIT_USAGE, EXIT_DEGENERACY, EXIT_INVARIANT
from .writers import render_csv, render_json, emit

__all__ = [
    "build_parser",
    "run",
    "CliErrorHandler",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_DEGENERACY",
    "EXIT_INVARIANT",
    "render_csv",
    "render_json",
    "emit",
]
