"""
Command-line surface: CSV ingestion and the ``ordinal-patterns`` commands.
"""

from .io import SeriesFile, read_series, read_code_sequence
from .main import build_parser, main

__all__ = ["SeriesFile", "read_series", "read_code_sequence", "build_parser", "main"]
