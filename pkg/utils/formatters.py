"""Parastab Formatting Utilities.

Exact-number formatting and the two renderings (JSON and text) of a report
payload.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, List


def format_fraction(value: Fraction) -> str:
    """Format a rational as ``"numerator/denominator"`` (always both parts).

    Args:
        value: The rational number.

    Returns:
        A string such as ``"18/1"`` or ``"-7/3"``.
    """
    return f"{value.numerator}/{value.denominator}"


def to_wire(data: Any) -> Any:
    """Convert a plain-data tree to its wire form.

    Integers (never booleans) become decimal strings, fractions become
    ``"p/q"`` strings and tuples become lists.
    """
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, Enum):
        return data.value
    if isinstance(data, int):
        return str(data)
    if isinstance(data, Fraction):
        return format_fraction(data)
    if isinstance(data, dict):
        return {str(key): to_wire(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_wire(item) for item in data]
    return data


def format_json_output(data: Any, indent: int = 2) -> str:
    """Format wire data as a JSON string.

    Args:
        data: The data to format.
        indent: Number of spaces for indentation.

    Returns:
        A pretty-printed JSON string.
    """
    return json.dumps(data, indent=indent, ensure_ascii=False)


def _is_scalar_list(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _render(value: Any, depth: int, lines: List[str], label: str) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        if label:
            lines.append(f"{pad}{label}:")
            depth += 1
        for key, item in value.items():
            _render(item, depth, lines, key)
    elif isinstance(value, list) and not _is_scalar_list(value):
        lines.append(f"{pad}{label}: ({len(value)})")
        for item in value:
            if _is_scalar_list(item):
                lines.append(f"{pad}  - ({', '.join(str(v) for v in item)})")
            else:
                lines.append(f"{pad}  -")
                _render(item, depth + 2, lines, "")
    elif isinstance(value, list):
        lines.append(f"{pad}{label}: ({', '.join(str(v) for v in value)})")
    else:
        lines.append(f"{pad}{label}: {'-' if value is None else value}")


def format_text_output(data: Any) -> str:
    """Render wire data as indented ``key: value`` lines."""
    lines: List[str] = []
    _render(data, 0, lines, "")
    return "\n".join(lines)
