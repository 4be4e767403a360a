"""Exact verification of the anthyphairetic incommensurability of diameter and side."""

from .exact_core import QuadraticSurd, parse_magnitude, format_magnitude, rational_make, surd_make

__version__ = "0.1.0"
