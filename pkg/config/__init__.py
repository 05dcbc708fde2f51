"""Parastab Configuration Module.

Configuration is controlled by:
  1. PARASTAB_* environment variables (or .env) → runtime settings
  2. config/conventions.yml → numbering conventions and lookup tables
"""

from config.settings import Settings, get_settings, override_settings
from config.conventions import (
    get_exceptional_vector_fields,
    get_rank_rule,
    get_reference,
    list_families,
)

__all__ = [
    "Settings",
    "get_settings",
    "override_settings",
    "get_exceptional_vector_fields",
    "get_rank_rule",
    "get_reference",
    "list_families",
]
