"""Parastab Utilities Module.

Common utilities used throughout parastab.
"""

from utils.logger import get_logger, setup_logging
from utils.formatters import format_fraction, format_json_output, format_text_output, to_wire

__all__ = [
    "get_logger",
    "setup_logging",
    "format_fraction",
    "format_json_output",
    "format_text_output",
    "to_wire",
]
