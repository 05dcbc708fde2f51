"""Parastab Error Types.

Every failure the engine reports falls into one of two families: bad input
(exit code 2) or an exceeded resource cap (exit code 3).
"""

from typing import Any, Dict, Optional


class ParastabError(Exception):
    """Base class for all parastab errors."""

    exit_code: int = 1


class InputError(ParastabError, ValueError):
    """Raised when parameters are outside the domain of an operation."""

    exit_code = 2


class ResourceError(ParastabError, RuntimeError):
    """Raised when an enumeration exceeds its configured cap.

    Attributes:
        cap: The configured limit.
        reached: How far the computation got before stopping.
        details: Extra context, e.g. the completed part of a search box.
    """

    exit_code = 3

    def __init__(
        self,
        message: str,
        *,
        cap: int,
        reached: int,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message)
        self.cap = cap
        self.reached = reached
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Serialize the cap information for a report envelope."""
        return {
            "message": str(self),
            "cap": str(self.cap),
            "reached": str(self.reached),
            "details": self.details,
        }
