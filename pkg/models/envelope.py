"""Report Envelope.

Every command prints exactly one envelope. Integers are emitted as decimal
strings by :func:`utils.formatters.to_wire`.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from config.settings import get_settings


class ReportEnvelope(BaseModel):
    """Wrapper around an operation payload."""

    schema_version: str = Field(default_factory=lambda: get_settings().schema_version)
    command: str
    input_echo: Dict[str, Any] = Field(default_factory=dict)
    result: Optional[Any] = None
    timing_ms: float = 0.0
    caps: List[Dict[str, Any]] = Field(default_factory=list)
    error: Optional[str] = None
