"""Conventions Loader.

Loads numbering conventions, rank rules and the Demazure exception table
from conventions.yml.

Usage:
    from config.conventions import get_rank_rule, get_exceptional_vector_fields
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from utils.logger import get_logger

_conventions: Optional[Dict[str, Any]] = None
_logger = get_logger("config.conventions")

_DEFAULTS: Dict[str, Any] = {
    "reference": "Bourbaki, Groupes et algebres de Lie, Chap VI, Planches",
    "families": {
        "A": {"min_rank": 1},
        "B": {"min_rank": 2},
        "C": {"min_rank": 2},
        "D": {"min_rank": 3, "canonical_min_rank": 4},
        "E": {"ranks": [6, 7, 8]},
        "F": {"ranks": [4]},
        "G": {"ranks": [2]},
    },
    "vector_fields": {"exceptional": []},
}


def _load_yaml() -> Dict[str, Any]:
    """Load the conventions.yml file."""
    global _conventions

    if _conventions is None:
        config_path = Path(__file__).parent / "conventions.yml"

        if config_path.exists():
            with open(config_path, "r") as f:
                _conventions = yaml.safe_load(f)
        else:
            _logger.warning("conventions.yml not found, using defaults")
            _conventions = _DEFAULTS

    return _conventions


def get_reference() -> str:
    """Return the citation for the simple-root numbering."""
    return _load_yaml().get("reference", _DEFAULTS["reference"])


def list_families() -> List[str]:
    """List the Cartan families in canonical order."""
    return sorted(_load_yaml().get("families", _DEFAULTS["families"]).keys())


def get_rank_rule(family: str) -> Optional[Dict[str, Any]]:
    """Get the admissible ranks for a Cartan family.

    Args:
        family: One of A, B, C, D, E, F, G.

    Returns:
        Dictionary with ``min_rank`` or an explicit ``ranks`` list,
        or None for an unknown family.
    """
    families = _load_yaml().get("families", _DEFAULTS["families"])
    return families.get(family)


def get_exceptional_vector_fields() -> List[Dict[str, Any]]:
    """Get the exceptional cases of the global vector field lookup.

    Returns:
        List of entries with family, crossed, algebra, per_rank and offset.
    """
    config = _load_yaml()
    return config.get("vector_fields", {}).get("exceptional", [])
