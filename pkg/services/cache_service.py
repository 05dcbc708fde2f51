"""Persistent Chow Basis Cache.

Stores W^P reduced words and the labeled Hasse edges as versioned JSON
files, one per (type, rank, Levi). A checksum over the canonical payload
detects corruption; a corrupt or stale entry is rebuilt without failing
the request.
"""

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from config.settings import get_settings
from engine.parabolic import ParabolicData
from engine.schubert import ChowBasis, build_chow_basis
from utils.logger import get_logger

CACHE_FORMAT = "chow-basis"


def _canonical(payload: Dict[str, Any]) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")


def _checksum(payload: Dict[str, Any]) -> str:
    return hashlib.sha256(_canonical(payload)).hexdigest()


class ChowCacheService:
    """Disk-backed, in-memory-fronted store of :class:`ChowBasis` objects."""

    def __init__(self, cache_dir: Optional[str] = None) -> None:
        settings = get_settings()
        directory = cache_dir if cache_dir is not None else settings.cache_dir
        self.cache_dir = Path(directory).expanduser() if directory else None
        self.schema_version = settings.schema_version
        self.weyl_cap = settings.weyl_cap
        self.logger = get_logger("service.cache")
        self._memory: Dict[Tuple[str, Tuple[int, ...]], ChowBasis] = {}

    def path_for(self, pd: ParabolicData) -> Optional[Path]:
        """File holding the basis of ``pd``, or None when the disk cache is off."""
        if self.cache_dir is None:
            return None
        levi = "-".join(str(i) for i in sorted(pd.levi)) or "none"
        return self.cache_dir / f"{pd.simple_type}_levi-{levi}.json"

    def get_basis(self, pd: ParabolicData) -> ChowBasis:
        """Return the Chow basis of ``pd``, loading or building it as needed."""
        key = (str(pd.simple_type), tuple(sorted(pd.levi)))
        basis = self._memory.get(key)
        if basis is not None:
            return basis

        basis = self._load(pd)
        if basis is None:
            basis = build_chow_basis(pd, cap=self.weyl_cap)
            self._store(pd, basis)
        self._memory[key] = basis
        return basis

    def _load(self, pd: ParabolicData) -> Optional[ChowBasis]:
        path = self.path_for(pd)
        if path is None or not path.exists():
            return None
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
            if document.get("format") != CACHE_FORMAT:
                raise ValueError("unexpected format tag")
            if document.get("schema_version") != self.schema_version:
                self.logger.info("cache_version_mismatch", path=str(path))
                return None
            payload = document["payload"]
            if _checksum(payload) != document.get("checksum"):
                raise ValueError("checksum mismatch")
            basis = ChowBasis.from_payload(pd, payload)
        except Exception as exc:
            self.logger.warning("cache_corrupt_rebuilding", path=str(path), error=str(exc))
            return None
        self.logger.debug("cache_hit", path=str(path), classes=basis.size)
        return basis

    def _store(self, pd: ParabolicData, basis: ChowBasis) -> None:
        path = self.path_for(pd)
        if path is None:
            return
        payload = basis.to_payload()
        document = {
            "format": CACHE_FORMAT,
            "schema_version": self.schema_version,
            "type": str(pd.simple_type),
            "levi": sorted(pd.levi),
            "checksum": _checksum(payload),
            "payload": payload,
        }
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=str(path.parent))
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(document, handle, sort_keys=True)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp, path)
        except OSError as exc:
            # A read-only cache directory must not fail the computation
            self.logger.warning("cache_write_failed", path=str(path), error=str(exc))
            return
        self.logger.debug("cache_stored", path=str(path), classes=basis.size)
