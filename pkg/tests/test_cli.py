"""End-to-end tests of the command-line surface."""

import json
from fractions import Fraction

import pytest

from config.settings import get_settings
from core.errors import InputError
from main import main


def run(capsys, *argv: str):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv: str):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestRootsys:
    def test_c3(self, capsys) -> None:
        code, report = run_json(capsys, "rootsys", "--type", "C", "--rank", "3")
        assert code == 0
        result = report["result"]
        assert result["highest_root"] == ["2", "2", "1"]
        assert result["highest_root_euclidean"] == ["2", "0", "0"]
        assert result["weyl_order"] == "48"
        assert result["min_admissible_char"] == "3"
        assert report["input_echo"] == {"type": "C", "rank": "3"}
        assert report["schema_version"] == "1"
        assert report["error"] is None

    def test_a1(self, capsys) -> None:
        _, report = run_json(capsys, "rootsys", "--type", "A", "--rank", "1")
        assert report["result"]["root_count"] == "2"

    def test_g2(self, capsys) -> None:
        _, report = run_json(capsys, "rootsys", "--type", "G", "--rank", "2")
        assert report["result"]["highest_root"] == ["3", "2"]
        assert report["result"]["min_admissible_char"] == "5"

    def test_characteristic(self, capsys) -> None:
        _, report = run_json(capsys, "rootsys", "--type", "G", "--rank", "2", "--char", "3")
        assert report["result"]["admissible"] is False
        assert report["result"]["max_coroot_pairing"] == "3"


class TestSubmodules:
    def test_lagrangian_grassmannian_char_2(self, capsys) -> None:
        code, report = run_json(
            capsys, "submodules", "--type", "C", "--rank", "2", "--levi", "1", "--char", "2", "--proper-only"
        )
        assert code == 0
        result = report["result"]
        assert result["count"] == "3"
        assert result["proper_count"] == "1"
        assert [c["roots"] for c in result["candidates"]] == [[["-1", "-1"]]]

    @pytest.mark.parametrize("levi,proper", [("2", "0"), ("", "3")])
    def test_a2_proper_counts(self, capsys, levi, proper) -> None:
        _, report = run_json(capsys, "submodules", "--type", "A", "--rank", "2", "--levi", levi, "--char", "0")
        assert report["result"]["proper_count"] == proper

    def test_full_listing_is_sorted(self, capsys) -> None:
        _, report = run_json(capsys, "submodules", "--type", "A", "--rank", "2")
        ranks = [int(c["rank"]) for c in report["result"]["candidates"]]
        assert ranks == [0, 1, 1, 2, 3]


class TestStability:
    def test_semistable_exit_code(self, capsys) -> None:
        code, report = run_json(
            capsys, "stability", "--type", "C", "--rank", "2", "--levi", "1", "--char", "2"
        )
        assert code == 10
        result = report["result"]
        assert result["status"] == "equivariantly-strictly-semistable"
        assert result["tangent_slope"]["ratio"] == "54/3"
        assert result["witnesses"][0]["candidate"]["roots"] == [["-1", "-1"]]
        assert report["input_echo"]["pol"] == "anticanonical"

    def test_unstable_exit_code(self, capsys) -> None:
        code, report = run_json(capsys, "stability", "--type", "A", "--rank", "2", "--pol", "1,2")
        assert code == 11
        assert report["result"]["status"] == "equivariantly-unstable"
        assert report["input_echo"]["pol"] == ["1", "2"]

    def test_full_flag_a2(self, capsys) -> None:
        code, report = run_json(capsys, "stability", "--type", "A", "--rank", "2", "--levi", "", "--char", "0")
        assert code == 0
        assert report["result"]["tangent_slope"]["ratio"] == "48/3"

    def test_stable_exit_code(self, capsys) -> None:
        code, report = run_json(capsys, "stability", "--type", "A", "--rank", "2", "--levi", "2")
        assert code == 0
        assert report["result"]["status"] == "equivariantly-stable"

    def test_point_is_invalid(self, capsys) -> None:
        code, report = run_json(capsys, "stability", "--type", "A", "--rank", "2", "--levi", "1,2")
        assert code == 2
        assert report["result"] is None
        assert report["error"]

    def test_truncated_exit_code(self, capsys, set_env) -> None:
        set_env("PARASTAB_SUBMODULE_CAP", "1")
        code, report = run_json(capsys, "stability", "--type", "A", "--rank", "2")
        assert code == 3
        assert report["result"]["truncated"] is True
        assert report["caps"][0]["cap"] == "1"

    def test_deterministic_apart_from_timing(self, capsys) -> None:
        argv = ("stability", "--type", "B", "--rank", "3", "--levi", "2", "--char", "2")
        _, first = run_json(capsys, *argv)
        _, second = run_json(capsys, *argv, "--threads", "3")
        first.pop("timing_ms")
        second.pop("timing_ms")
        assert first == second

    def test_echo_reproduces_result(self, capsys) -> None:
        _, first = run_json(capsys, "stability", "--type", "c", "--rank", "3", "--levi", "2,1,2", "--char", "2")
        echo = first["input_echo"]
        assert echo["levi"] == ["1", "2"]
        _, second = run_json(
            capsys,
            "stability",
            "--type",
            echo["type"],
            "--rank",
            echo["rank"],
            "--levi",
            ",".join(echo["levi"]),
            "--char",
            echo["char"],
        )
        assert second["result"] == first["result"]

    def test_cache_is_transparent(self, capsys, cache_dir) -> None:
        argv = ("stability", "--type", "B", "--rank", "2", "--cache-dir", str(cache_dir))
        _, cold = run_json(capsys, *argv)
        assert list(cache_dir.glob("*.json"))
        _, warm = run_json(capsys, *argv)
        assert cold["result"] == warm["result"]

    def test_text_format(self, capsys) -> None:
        code, out = run(capsys, "stability", "--type", "A", "--rank", "2", "--levi", "2", "--format", "text")
        assert code == 0
        assert "status: equivariantly-stable" in out
        assert "command: stability" in out


class TestSearchPolarization:
    def test_full_flag_a2(self, capsys) -> None:
        code, report = run_json(capsys, "search-polarization", "--type", "A", "--rank", "2", "--max-coeff", "2")
        assert code == 0
        result = report["result"]
        assert result["scanned"] == "3"
        assert [w["polarization"] for w in result["witnesses"]] == [["1", "2"], ["2", "1"]]

    def test_picard_rank_one(self, capsys) -> None:
        code, report = run_json(
            capsys, "search-polarization", "--type", "B", "--rank", "3", "--levi", "1,2", "--max-coeff", "4"
        )
        assert code == 0
        assert report["result"]["witnesses"] == []

    def test_larger_box_witnesses_check_out(self, capsys) -> None:
        _, report = run_json(capsys, "search-polarization", "--type", "A", "--rank", "2", "--max-coeff", "6")
        for witness in report["result"]["witnesses"]:
            pol = ",".join(witness["polarization"])
            code, verdict = run_json(capsys, "stability", "--type", "A", "--rank", "2", "--pol", pol)
            assert code == 11
            assert Fraction(witness["slope"]["slope"]) <= Fraction(verdict["result"]["max_proper_slope"])
            assert Fraction(witness["slope"]["slope"]) > Fraction(verdict["result"]["tangent_slope"]["slope"])

    def test_polarization_cap(self, capsys, set_env) -> None:
        set_env("PARASTAB_POLARIZATION_CAP", "2")
        code, report = run_json(capsys, "search-polarization", "--type", "A", "--rank", "2", "--max-coeff", "3")
        assert code == 3
        assert report["caps"][0]["details"]["completed_max_coeff"] == "1"

    def test_rejects_zero_box(self, capsys) -> None:
        code, report = run_json(capsys, "search-polarization", "--type", "A", "--rank", "2", "--max-coeff", "0")
        assert code == 2
        assert report["error"]


class TestDemazure:
    def test_exceptional(self, capsys) -> None:
        code, report = run_json(capsys, "demazure", "--type", "C", "--rank", "3", "--levi", "2,3")
        assert code == 0
        assert report["result"]["name"] == "sl(6)"
        assert report["result"]["dimension"] == "35"


    def test_orthogonal_grassmannian(self, capsys) -> None:
        _, report = run_json(capsys, "demazure", "--type", "B", "--rank", "3", "--levi", "1,2")
        assert report["result"]["name"] == "so(8)"

    def test_generic_case_is_adjoint(self, capsys) -> None:
        _, report = run_json(capsys, "demazure", "--type", "A", "--rank", "3", "--levi", "2,3")
        assert report["result"]["kind"] == "adjoint"
        assert report["result"]["dimension"] == "15"


class TestSweep:
    def test_rank_two(self, capsys) -> None:
        code, report = run_json(capsys, "sweep", "--max-rank", "2")
        assert code == 0
        assert report["result"]["all_stable"] is True
        assert len(report["result"]["rows"]) == 13

    def test_rank_two_char_two(self, capsys) -> None:
        code, _ = run_json(capsys, "sweep", "--max-rank", "2", "--char", "2")
        assert code == 11


class TestInvalidInput:
    @pytest.mark.parametrize(
        "argv",
        [
            ("rootsys", "--type", "B", "--rank", "1"),
            ("rootsys", "--type", "Q", "--rank", "2"),
            ("stability", "--type", "A", "--rank", "2", "--char", "4"),
            ("stability", "--type", "A", "--rank", "2", "--levi", "3"),
            ("stability", "--type", "A", "--rank", "2", "--levi", "x"),
            ("stability", "--type", "A", "--rank", "2", "--pol", "0,1"),
            ("stability", "--type", "A", "--rank", "2", "--pol", "1"),
            ("sweep", "--max-rank", "0"),
        ],
    )
    def test_exit_code_two(self, capsys, argv) -> None:
        code, report = run_json(capsys, *argv)
        assert code == 2
        assert report["error"]

    def test_argparse_errors(self, capsys) -> None:
        with pytest.raises(SystemExit) as info:
            main(["stability", "--rank", "2"])
        assert info.value.code == 2
        with pytest.raises(SystemExit):
            main(["stability", "--type", "A", "--rank", "2", "--threads", "0"])

    def test_invalid_environment_setting(self, capsys, set_env) -> None:
        set_env("PARASTAB_THREADS", "0")
        code, report = run_json(capsys, "stability", "--type", "A", "--rank", "2")
        assert code == 2
        assert report["command"] == "stability"
        assert report["result"] is None
        assert "threads" in report["error"]

    def test_invalid_setting_is_input_error(self, set_env) -> None:
        set_env("PARASTAB_SUBMODULE_CAP", "none")
        with pytest.raises(InputError):
            get_settings()
