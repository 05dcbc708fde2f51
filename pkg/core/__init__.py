"""Parastab Core Module.

Cross-cutting abstractions: the error hierarchy, the command registry and
the command base class.
"""

from core.errors import InputError, ParastabError, ResourceError
from core.registry import ComponentRegistry

__all__ = [
    "InputError",
    "ParastabError",
    "ResourceError",
    "ComponentRegistry",
]
