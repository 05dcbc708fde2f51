"""Tests for root strings, structure constants and admissible characteristics."""

import pytest
import sympy

from core.errors import InputError
from engine.chevalley import (
    CharMode,
    divided_power_coefficient,
    is_admissible,
    min_admissible_char,
    root_string_down,
    root_string_up,
    string_data,
    structure_constant_magnitude,
)
from engine.rootsys import SimpleType

RANK_AT_MOST_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"]


def divided_power_oracle(length: int, position: int, k: int) -> int:
    """Coefficient of t^k in u(t) = exp(t e) on the string module Gamma^(length-1).

    The string through alpha is modeled by divided powers x^[a] y^[b] with
    a + b = length - 1, alpha sitting at b = position; u sends x to x + t*y.
    """
    x, y, t = sympy.symbols("x y t")
    a, b = length - 1 - position, position
    image = sympy.expand((x + t * y) ** a / sympy.factorial(a) * y**b / sympy.factorial(b))
    coeff = image.coeff(t, k).coeff(x, a - k).coeff(y, b + k)
    return int(coeff * sympy.factorial(a - k) * sympy.factorial(b + k))


def pairs(system):
    for alpha in system.roots:
        for beta in system.roots:
            if beta != alpha and beta != system.negate(alpha):
                yield alpha, beta


class TestCharMode:
    def test_zero_and_prime(self) -> None:
        assert CharMode.zero().is_zero
        assert str(CharMode.positive(7)) == "7"
        assert CharMode.parse(" 3 ") == CharMode(3)

    @pytest.mark.parametrize("value", [1, 4, 9, -2])
    def test_rejects_non_prime(self, value: int) -> None:
        with pytest.raises(InputError):
            CharMode(value)

    def test_positive_mode_needs_prime(self) -> None:
        with pytest.raises(InputError):
            CharMode.positive(0)
        with pytest.raises(InputError):
            CharMode.parse("two")

    def test_kills(self) -> None:
        assert CharMode(2).kills(2)
        assert not CharMode(2).kills(3)
        assert not CharMode.zero().kills(2)
        assert CharMode.zero().kills(0)


class TestRootStrings:
    def test_a2_theta_string(self, rs) -> None:
        assert root_string_down(rs("A2"), (-1, -1), (1, 0)) == 0

    def test_c2_string(self, rs) -> None:
        # -(e1+e2) along e1-e2
        assert root_string_down(rs("C2"), (-1, -1), (1, 0)) == 1

    def test_g2_string(self, rs) -> None:
        assert root_string_down(rs("G2"), (2, 1), (1, 0)) == 2
        assert root_string_up(rs("G2"), (2, 1), (1, 0)) == 1

    @pytest.mark.parametrize("bad", [(1, 0), (-1, 0)])
    def test_rejects_plus_minus_alpha(self, rs, bad) -> None:
        with pytest.raises(InputError):
            root_string_down(rs("A2"), (1, 0), bad)

    def test_rejects_non_root(self, rs) -> None:
        with pytest.raises(InputError):
            string_data(rs("A2"), (2, 0), (0, 1))

    @pytest.mark.parametrize("label", RANK_AT_MOST_4)
    def test_string_identities(self, rs, label: str) -> None:
        system = rs(label)
        for alpha, beta in pairs(system):
            data = string_data(system, alpha, beta)
            assert data.down_length + data.up_length <= 3
            assert data.length <= 4
            assert data.down_length - data.up_length == system.pairing(alpha, beta)


class TestStructureConstants:
    def test_examples(self, rs) -> None:
        assert structure_constant_magnitude(rs("A2"), (-1, -1), (1, 0)) == 1
        assert structure_constant_magnitude(rs("C2"), (-1, -1), (1, 0)) == 2
        # -2e1 + 2e2 is not a root of C2
        assert structure_constant_magnitude(rs("C2"), (-2, -1), (0, 1)) == 0

    @pytest.mark.parametrize("label", RANK_AT_MOST_4)
    def test_magnitude_range(self, rs, label: str) -> None:
        system = rs(label)
        values = {structure_constant_magnitude(system, a, b) for a, b in pairs(system)}
        assert values <= {0, 1, 2, 3}
        if label[0] in ("A", "D"):
            assert values <= {0, 1}
        if label != "G2":
            assert 3 not in values
        else:
            assert 3 in values

    @pytest.mark.parametrize("label", RANK_AT_MOST_4)
    def test_admissible_primes_see_every_bracket(self, rs, label: str) -> None:
        system = rs(label)
        t = SimpleType.parse(label)
        for p in (q for q in (2, 3, 5, 7) if q >= min_admissible_char(t)):
            for alpha, beta in pairs(system):
                if system.is_root(system.add(alpha, beta)):
                    assert structure_constant_magnitude(system, alpha, beta) % p != 0


class TestDividedPowers:
    def test_c2_examples(self, rs) -> None:
        system = rs("C2")
        assert divided_power_coefficient(system, (-2, -1), (1, 0), 2) == 1
        assert divided_power_coefficient(system, (-1, -1), (1, 0), 1) == 2

    @pytest.mark.parametrize("label", RANK_AT_MOST_4)
    def test_first_power_is_structure_constant(self, rs, label: str) -> None:
        system = rs(label)
        for alpha, beta in pairs(system):
            if system.is_root(system.add(alpha, beta)):
                assert divided_power_coefficient(system, alpha, beta, 1) == structure_constant_magnitude(
                    system, alpha, beta
                )

    @pytest.mark.parametrize("label", ["B2", "C2", "G2", "B3", "C3"])
    def test_matches_divided_power_oracle(self, rs, label: str) -> None:
        system = rs(label)
        for alpha, beta in pairs(system):
            data = string_data(system, alpha, beta)
            for k in range(1, data.up_length + 1):
                expected = divided_power_oracle(data.length, data.down_length, k)
                assert divided_power_coefficient(system, alpha, beta, k) == expected

    def test_rejects_bad_k(self, rs) -> None:
        system = rs("C2")
        with pytest.raises(InputError):
            divided_power_coefficient(system, (-2, -1), (1, 0), 0)
        with pytest.raises(InputError):
            divided_power_coefficient(system, (-2, -1), (1, 0), 3)


class TestAdmissibility:
    @pytest.mark.parametrize(
        "label,expected",
        [("A1", 2), ("A4", 2), ("D4", 2), ("E6", 2), ("E8", 2), ("B3", 3), ("C2", 3), ("F4", 3), ("G2", 5)],
    )
    def test_min_admissible_char(self, label: str, expected: int) -> None:
        assert min_admissible_char(SimpleType.parse(label)) == expected

    def test_is_admissible(self) -> None:
        c2 = SimpleType("C", 2)
        assert is_admissible(c2, CharMode.zero())
        assert not is_admissible(c2, CharMode(2))
        assert is_admissible(c2, CharMode(3))
        assert not is_admissible(SimpleType("G", 2), CharMode(3))
        assert is_admissible(SimpleType("A", 3), CharMode(2))
