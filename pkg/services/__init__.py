"""Parastab Services Module.

Orchestration on top of the engine: the persistent Chow basis cache and
the stability verdict engine.
"""

from services.cache_service import ChowCacheService
from services.stability_service import StabilityService

__all__ = ["ChowCacheService", "StabilityService"]
