"""Root Strings and Chevalley Coefficients.

Only magnitudes are computed. Every downstream use is a divisibility test
modulo the characteristic, so the signs of a Chevalley basis never matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from sympy import isprime, nextprime

from core.errors import InputError
from engine.rootsys import Root, RootSystem, SimpleType, build_root_system


@dataclass(frozen=True)
class CharMode:
    """Characteristic of the ground field: 0 or a prime p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic < 0:
            raise InputError(f"Characteristic must be 0 or a prime, got {self.characteristic}")
        if self.characteristic and not isprime(self.characteristic):
            raise InputError(f"Characteristic {self.characteristic} is not prime")

    @classmethod
    def zero(cls) -> "CharMode":
        return cls(0)

    @classmethod
    def positive(cls, p: int) -> "CharMode":
        if p == 0:
            raise InputError("Positive mode needs a prime; use CharMode.zero()")
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "CharMode":
        try:
            value = int(str(text).strip())
        except ValueError as exc:
            raise InputError(f"Cannot parse characteristic '{text}'") from exc
        return cls(value)

    @property
    def is_zero(self) -> bool:
        return self.characteristic == 0

    def kills(self, coefficient: int) -> bool:
        """True if the coefficient vanishes in this characteristic."""
        if self.is_zero:
            return coefficient == 0
        return coefficient % self.characteristic == 0

    def __str__(self) -> str:
        return "0" if self.is_zero else str(self.characteristic)


@dataclass(frozen=True)
class StringData:
    """The beta-string through alpha: alpha - down*beta, ..., alpha + up*beta."""

    alpha: Root
    beta: Root
    down_length: int
    up_length: int

    @property
    def length(self) -> int:
        return self.down_length + self.up_length + 1


def _check_pair(rs: RootSystem, alpha: Root, beta: Root) -> None:
    if not rs.is_root(alpha) or not rs.is_root(beta):
        raise InputError(f"{alpha} and {beta} must both be roots of {rs.simple_type}")
    if tuple(beta) == tuple(alpha) or tuple(beta) == rs.negate(alpha):
        raise InputError("beta must differ from +/- alpha")


@lru_cache(maxsize=65536)
def string_data(rs: RootSystem, alpha: Root, beta: Root) -> StringData:
    """Scan the root set along the beta-string through alpha."""
    _check_pair(rs, alpha, beta)
    down = 0
    while rs.is_root(rs.add(alpha, beta, -(down + 1))):
        down += 1
    up = 0
    while rs.is_root(rs.add(alpha, beta, up + 1)):
        up += 1
    return StringData(tuple(alpha), tuple(beta), down, up)


def root_string_down(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """Largest m >= 0 with alpha - m*beta a root."""
    return string_data(rs, tuple(alpha), tuple(beta)).down_length


def root_string_up(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """Largest m >= 0 with alpha + m*beta a root."""
    return string_data(rs, tuple(alpha), tuple(beta)).up_length


def structure_constant_magnitude(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """|N_{beta,alpha}|: p + 1 if alpha + beta is a root, else 0."""
    data = string_data(rs, tuple(alpha), tuple(beta))
    if data.up_length == 0:
        return 0
    return data.down_length + 1


def divided_power_coefficient(rs: RootSystem, alpha: Root, beta: Root, k: int) -> int:
    """Coefficient by which x_beta(t) sends g^alpha to t^k g^(alpha + k*beta).

    Equals binomial(p + k, k) with p the down length of the string; for
    k = 1 this is the structure constant magnitude.

    Raises:
        InputError: k < 1 or alpha + k*beta is not a root.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    data = string_data(rs, tuple(alpha), tuple(beta))
    if k > data.up_length:
        raise InputError(f"{alpha} + {k}*{beta} is not a root")
    return comb(data.down_length + k, k)


def min_admissible_char(t: SimpleType) -> int:
    """Smallest prime larger than every <beta, alpha^vee> with alpha != beta.

    2 for A, D, E; 3 for B, C, F; 5 for G.
    """
    return int(nextprime(build_root_system(t).max_coroot_pairing()))


def is_admissible(t: SimpleType, mode: CharMode) -> bool:
    """Characteristic zero is always admissible; p must reach the threshold."""
    return mode.is_zero or mode.characteristic >= min_admissible_char(t)
