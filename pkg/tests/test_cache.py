"""Tests for the persistent Chow basis cache."""

import json

from services.cache_service import CACHE_FORMAT, ChowCacheService


def same_basis(left, right) -> bool:
    return left.reps == right.reps and left.edges == right.edges


class TestPaths:
    def test_file_names(self, cache_dir, space) -> None:
        cache = ChowCacheService(cache_dir=str(cache_dir))
        assert cache.path_for(space("C3", 1, 2)).name == "C3_levi-1-2.json"
        assert cache.path_for(space("A2")).name == "A2_levi-none.json"

    def test_disabled_without_directory(self, space) -> None:
        cache = ChowCacheService()
        pd = space("B2")
        assert cache.path_for(pd) is None
        assert cache.get_basis(pd) is cache.get_basis(pd)

    def test_directory_from_environment(self, set_env, cache_dir) -> None:
        set_env("PARASTAB_CACHE", str(cache_dir))
        assert ChowCacheService().cache_dir == cache_dir


class TestPersistence:
    def test_cold_then_warm(self, cache_dir, space) -> None:
        pd = space("B3", 2)
        cold = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        path = cache_dir / "B3_levi-2.json"
        assert path.exists()
        document = json.loads(path.read_text(encoding="utf-8"))
        assert document["format"] == CACHE_FORMAT
        assert document["levi"] == [2]

        warm = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        assert warm is not cold
        assert same_basis(warm, cold)
        assert not list(cache_dir.glob("*.tmp"))

    def test_garbage_is_rebuilt(self, cache_dir, space) -> None:
        pd = space("G2")
        reference = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        path = cache_dir / "G2_levi-none.json"
        path.write_text("{not json", encoding="utf-8")

        rebuilt = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        assert same_basis(rebuilt, reference)
        assert json.loads(path.read_text(encoding="utf-8"))["format"] == CACHE_FORMAT

    def test_tampered_payload_is_rebuilt(self, cache_dir, space) -> None:
        pd = space("A3")
        reference = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        path = cache_dir / "A3_levi-none.json"
        document = json.loads(path.read_text(encoding="utf-8"))
        document["payload"]["edges"] = document["payload"]["edges"][1:]
        path.write_text(json.dumps(document), encoding="utf-8")

        rebuilt = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        assert same_basis(rebuilt, reference)

    def test_schema_mismatch_is_rebuilt(self, cache_dir, space) -> None:
        pd = space("C2", 1)
        reference = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        path = cache_dir / "C2_levi-1.json"
        document = json.loads(path.read_text(encoding="utf-8"))
        document["schema_version"] = "0"
        path.write_text(json.dumps(document), encoding="utf-8")

        rebuilt = ChowCacheService(cache_dir=str(cache_dir)).get_basis(pd)
        assert same_basis(rebuilt, reference)
        assert json.loads(path.read_text(encoding="utf-8"))["schema_version"] == "1"

    def test_unwritable_directory_still_computes(self, tmp_path, space) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("", encoding="utf-8")
        cache = ChowCacheService(cache_dir=str(blocker / "sub"))
        assert cache.get_basis(space("A2", 2)).size == 3
