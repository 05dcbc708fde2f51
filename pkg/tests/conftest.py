"""Pytest Configuration and Fixtures.

This module contains shared fixtures and configuration for the parastab test suite.
"""

from collections.abc import Callable, Generator
from pathlib import Path

import pytest

import config.settings as settings_module
from config.settings import Settings
from engine.chevalley import CharMode
from engine.parabolic import ParabolicData, tangent_roots
from engine.rootsys import RootSystem, SimpleType, build_root_system
from engine.schubert import ChowBasis, build_chow_basis
from services.cache_service import ChowCacheService
from services.stability_service import StabilityService
from utils.logger import setup_logging


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Give every test a fresh settings singleton without a disk cache.

    Logging is reconfigured so structlog writes to the current capture stream.
    """
    monkeypatch.delenv("PARASTAB_CACHE", raising=False)
    settings_module._settings = None
    setup_logging()
    yield
    settings_module._settings = None


@pytest.fixture
def set_env(monkeypatch: pytest.MonkeyPatch) -> Callable[[str, str], None]:
    """Set a PARASTAB_* variable and drop the settings singleton so it is read."""

    def apply(name: str, value: str) -> None:
        monkeypatch.setenv(name, value)
        settings_module._settings = None

    return apply


@pytest.fixture
def test_settings() -> Settings:
    """Create test settings with small caps."""
    return Settings(log_level="DEBUG", threads=1, cache_dir=None)


@pytest.fixture
def cache_dir(tmp_path: Path) -> Path:
    """Empty directory for the persistent Chow basis cache."""
    directory = tmp_path / "cache"
    directory.mkdir()
    return directory


@pytest.fixture
def rs() -> Callable[[str], RootSystem]:
    """Build a root system from a label such as ``"C2"``."""

    def build(label: str) -> RootSystem:
        return build_root_system(SimpleType.parse(label))

    return build


@pytest.fixture
def space() -> Callable[..., ParabolicData]:
    """Build parabolic data from a label and Levi indices."""

    def build(label: str, *levi: int) -> ParabolicData:
        return tangent_roots(build_root_system(SimpleType.parse(label)), levi)

    return build


@pytest.fixture
def basis() -> Callable[..., ChowBasis]:
    """Build the Chow basis of a space."""

    def build(label: str, *levi: int) -> ChowBasis:
        return build_chow_basis(tangent_roots(build_root_system(SimpleType.parse(label)), levi))

    return build


@pytest.fixture
def char0() -> CharMode:
    return CharMode.zero()


@pytest.fixture
def service(test_settings: Settings) -> StabilityService:
    """Stability service with an in-memory cache only."""
    settings_module._settings = test_settings
    return StabilityService(ChowCacheService(), settings=test_settings)
