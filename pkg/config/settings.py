"""Parastab Settings Configuration.

This module uses Pydantic Settings to manage application configuration
via environment variables and .env files.

Configuration:
  - PARASTAB_* environment variables override the defaults below
  - PARASTAB_CACHE: directory for the persistent Weyl/Hasse cache
  - config/conventions.yml: numbering conventions and lookup tables
"""

from typing import Optional

from pydantic import AliasChoices, Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.errors import InputError


class Settings(BaseSettings):
    """Parastab Application Settings."""

    # ==========================================================================
    # Application
    # ==========================================================================
    app_name: str = "parastab"
    app_version: str = "0.1.0"
    schema_version: str = "1"

    # ==========================================================================
    # Logging (always written to stderr)
    # ==========================================================================
    log_level: str = "WARNING"
    log_format: str = "console"

    # ==========================================================================
    # Persistent cache for W^P reduced words and Hasse edges
    # ==========================================================================
    cache_dir: Optional[str] = Field(
        default=None,
        validation_alias=AliasChoices("PARASTAB_CACHE", "cache_dir"),
    )

    # ==========================================================================
    # Resource caps
    # ==========================================================================
    weyl_cap: int = Field(default=1_000_000, ge=1)
    submodule_cap: int = Field(default=1_000_000, ge=1)
    polarization_cap: int = Field(default=1_000_000, ge=1)

    # Worker threads for slope evaluation and polarization scans
    threads: int = Field(default=1, ge=1)

    model_config = SettingsConfigDict(
        env_prefix="PARASTAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the application settings singleton.

    Raises:
        InputError: A PARASTAB_* variable or .env entry fails validation.
    """
    global _settings
    if _settings is None:
        try:
            _settings = Settings()
        except ValidationError as exc:
            fields = ", ".join(".".join(str(part) for part in err["loc"]) for err in exc.errors())
            raise InputError(f"Invalid PARASTAB_* setting: {fields}") from exc
    return _settings


def override_settings(**overrides: object) -> Settings:
    """Replace the singleton with a copy carrying per-invocation overrides.

    Args:
        **overrides: Field values to change; ``None`` values are ignored.

    Returns:
        The new settings singleton.
    """
    global _settings
    update = {key: value for key, value in overrides.items() if value is not None}
    _settings = get_settings().model_copy(update=update)
    return _settings
