"""Schubert Calculus on G/P.

The Chow ring of G/P has the Schubert basis [X_w], w in W^P, with X_w of
dimension l(w). Multiplication by the divisor class of a P-character lam
follows the Chevalley formula

    c1(L_lam) . [X_w] = sum <lam, gamma^vee> [X_{w s_gamma}]

over positive roots gamma with w(gamma) < 0 and w s_gamma a minimal
representative of length l(w) - 1. Degrees are read off the point class
(the identity) after descending from the fundamental class. Everything is
exact: Python integers for coefficients, Fraction for slopes.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from core.errors import InputError, ParastabError
from engine.parabolic import ParabolicData, SubmoduleCandidate, c1_weight
from engine.rootsys import DEFAULT_WEYL_CAP, Root, Weight, WeylElement, coset_orbit
from utils.logger import get_logger

_logger = get_logger("engine.schubert")


@dataclass(frozen=True)
class Polarization:
    """A line bundle sum c_i varpi_i over the crossed indices of P."""

    coeffs: Tuple[int, ...]

    @classmethod
    def anticanonical(cls, pd: ParabolicData) -> "Polarization":
        return cls.from_weight(pd, pd.anticanonical_weight)

    @classmethod
    def from_weight(cls, pd: ParabolicData, weight: Weight) -> "Polarization":
        check_levi_character(pd, weight)
        return cls(tuple(weight.fw_coords[i - 1] for i in pd.crossed))

    @property
    def is_ample(self) -> bool:
        return bool(self.coeffs) and all(c >= 1 for c in self.coeffs)

    def primitive(self) -> "Polarization":
        """Divide out the gcd of the coefficients."""
        divisor = reduce(gcd, self.coeffs, 0) or 1
        return Polarization(tuple(c // divisor for c in self.coeffs))

    def as_weight(self, pd: ParabolicData) -> Weight:
        if len(self.coeffs) != pd.picard_rank:
            raise InputError(
                f"Polarization needs {pd.picard_rank} coefficients (crossed indices "
                f"{list(pd.crossed)}), got {len(self.coeffs)}"
            )
        coords = [0] * pd.rs.rank
        for index, coeff in zip(pd.crossed, self.coeffs):
            coords[index - 1] = coeff
        return Weight(tuple(coords))


@dataclass(frozen=True)
class SlopeReport:
    """Degree, rank and exact slope of an equivariant bundle."""

    degree: int
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise InputError("Slope is undefined for rank 0")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    @property
    def ratio(self) -> str:
        """Unreduced ``degree/rank``."""
        return f"{self.degree}/{self.rank}"


@dataclass
class ChowClass:
    """A cycle class: finitely many nonzero coefficients on W^P (by index)."""

    coeffs: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.coeffs = {i: c for i, c in self.coeffs.items() if c}

    @classmethod
    def fundamental(cls, basis: "ChowBasis") -> "ChowClass":
        return cls({basis.top: 1})

    @classmethod
    def point(cls, basis: "ChowBasis") -> "ChowClass":
        return cls({basis.bottom: 1})

    def coefficient(self, index: int) -> int:
        return self.coeffs.get(index, 0)

    def grades(self, basis: "ChowBasis") -> List[int]:
        return sorted({basis.lengths[i] for i in self.coeffs})

    def __add__(self, other: "ChowClass") -> "ChowClass":
        total = dict(self.coeffs)
        for i, c in other.coeffs.items():
            total[i] = total.get(i, 0) + c
        return ChowClass(total)

    def scale(self, factor: int) -> "ChowClass":
        return ChowClass({i: factor * c for i, c in self.coeffs.items()})


@dataclass(frozen=True)
class HasseEdge:
    """w -> w s_gamma, dropping the length by one."""

    source: int
    target: int
    gamma: Root


class ChowBasis:
    """Schubert basis of G/P with the labeled Hasse diagram of the Chevalley formula.

    Attributes:
        pd: The parabolic data.
        reps: W^P sorted by (length, word); index 0 is the identity.
        lengths: l(w) for each rep.
        edges: Labeled edges in deterministic order.
    """

    def __init__(
        self,
        pd: ParabolicData,
        reps: Sequence[WeylElement],
        edges: Sequence[HasseEdge],
    ) -> None:
        self.pd = pd
        self.reps = tuple(reps)
        self.lengths = tuple(w.length for w in self.reps)
        self.edges = tuple(edges)
        self.index = {w.word: i for i, w in enumerate(self.reps)}

        down: List[List[Tuple[int, Root]]] = [[] for _ in self.reps]
        for edge in self.edges:
            down[edge.source].append((edge.target, edge.gamma))
        self._down = tuple(tuple(out) for out in down)

        self._memo: Dict[Tuple[int, ...], Dict[int, int]] = {}
        self._lock = threading.Lock()
        self._verify_grading()

    def _verify_grading(self) -> None:
        n = self.pd.dimension
        tops = [i for i, length in enumerate(self.lengths) if length == n]
        if not self.reps or self.lengths[0] != 0 or len(tops) != 1 or max(self.lengths) != n:
            raise ParastabError(f"Schubert grading of {self.pd} does not match dim {n}")
        self.top = tops[0]
        self.bottom = 0

    @property
    def size(self) -> int:
        return len(self.reps)

    @property
    def dimension(self) -> int:
        return self.pd.dimension

    @property
    def grade_sizes(self) -> Tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for length in self.lengths:
            counts[length] += 1
        return tuple(counts)

    def down_edges(self, index: int) -> Tuple[Tuple[int, Root], ...]:
        return self._down[index]

    def generator_degrees(self, pol: Polarization) -> Dict[int, int]:
        """deg(varpi_i) against pol for every crossed index i, memoized."""
        key = pol.coeffs
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached

        pd = self.pd
        x = ChowClass.fundamental(self)
        weight = pol.as_weight(pd)
        for _ in range(self.dimension - 1):
            x = multiply_by_divisor(self, x, weight)
        result = {
            i: multiply_by_divisor(self, x, Weight.fundamental(pd.rs.rank, i)).coefficient(
                self.bottom
            )
            for i in pd.crossed
        }
        with self._lock:
            self._memo.setdefault(key, result)
        return result

    def to_payload(self) -> Dict[str, Any]:
        """Plain-data form for the persistent cache."""
        return {
            "reps": [list(w.word) for w in self.reps],
            "edges": [[e.source, e.target, list(e.gamma)] for e in self.edges],
        }

    @classmethod
    def from_payload(cls, pd: ParabolicData, payload: Mapping[str, Any]) -> "ChowBasis":
        reps = [WeylElement.from_word(pd.rs, word) for word in payload["reps"]]
        edges = [HasseEdge(int(s), int(t), tuple(int(a) for a in g)) for s, t, g in payload["edges"]]
        return cls(pd, reps, edges)


def build_chow_basis(pd: ParabolicData, cap: Optional[int] = DEFAULT_WEYL_CAP) -> ChowBasis:
    """Compute W^P and the labeled Hasse edges of the Chevalley formula.

    Raises:
        ResourceError: |W^P| exceeds ``cap``.
    """
    rs = pd.rs
    orbit = coset_orbit(rs, pd.levi, cap)
    position = {mu: i for i, (mu, _) in enumerate(orbit)}
    lengths = [w.length for _, w in orbit]
    rho = orbit[0][0]
    gammas = [g for g in rs.positive_roots if not rs.support(g) <= pd.levi]
    rho_pairing = {g: rs.pairing(rho, g) for g in gammas}

    edges: List[HasseEdge] = []
    for i, (mu, w) in enumerate(orbit):
        if lengths[i] == 0:
            continue
        for gamma in gammas:
            image = w.act(gamma)
            if not rs.is_negative(image):
                continue
            # (w s_gamma)(rho) = w(rho) - <rho, gamma^vee> w(gamma)
            target = mu - rs.to_weight(image).scale(rho_pairing[gamma])
            j = position[target]
            if lengths[j] == lengths[i] - 1:
                edges.append(HasseEdge(i, j, gamma))

    _logger.debug(
        "built_chow_basis",
        space=repr(pd),
        classes=len(orbit),
        edges=len(edges),
    )
    return ChowBasis(pd, [w for _, w in orbit], edges)


def check_levi_character(pd: ParabolicData, weight: Weight) -> None:
    """Raise unless the weight pairs to zero with every Levi coroot."""
    bad = [i for i in sorted(pd.levi) if weight.fw_coords[i - 1] != 0]
    if bad:
        raise InputError(f"Weight {weight.fw_coords} is not a character of P (Levi indices {bad})")


def multiply_by_divisor(
    basis: ChowBasis,
    x: ChowClass,
    lam: Union[Polarization, Weight],
) -> ChowClass:
    """Intersect a class with the divisor of lam (Chevalley formula)."""
    pd = basis.pd
    weight = lam.as_weight(pd) if isinstance(lam, Polarization) else lam
    check_levi_character(pd, weight)

    pairings: Dict[Root, int] = {}
    out: Dict[int, int] = defaultdict(int)
    for i, coeff in x.coeffs.items():
        for j, gamma in basis.down_edges(i):
            value = pairings.get(gamma)
            if value is None:
                value = pairings[gamma] = pd.rs.pairing(weight, gamma)
            if value:
                out[j] += coeff * value
    return ChowClass(dict(out))


def degree(
    basis: ChowBasis,
    c1: Weight,
    pol: Polarization,
    *,
    raw: bool = False,
) -> int:
    """deg = [G/P] . pol^(N-1) . c1, read at the point class.

    Degree is linear in c1, so it is the dot product of c1 with the memoized
    degrees of the fundamental weights.

    Args:
        basis: Chow basis of G/P.
        c1: A character of P.
        pol: The polarization; must be ample unless ``raw`` is set.
        raw: Allow arbitrary integer polarizations.

    Raises:
        InputError: dim G/P = 0, non-ample pol, or c1 not a character of P.
    """
    pd = basis.pd
    if pd.dimension < 1:
        raise InputError("Degrees need dim G/P >= 1")
    if not raw and not pol.is_ample:
        raise InputError(f"Polarization {list(pol.coeffs)} is not ample")
    check_levi_character(pd, c1)
    per_generator = basis.generator_degrees(pol)
    return sum(c1.fw_coords[i - 1] * per_generator[i] for i in pd.crossed)


def self_intersection(basis: ChowBasis, pol: Polarization) -> int:
    """pol^N, the degree of pol against itself."""
    return degree(basis, pol.as_weight(basis.pd), pol)


def slope(c: SubmoduleCandidate, pol: Polarization, basis: ChowBasis) -> SlopeReport:
    """Slope of M(I) against pol.

    Raises:
        InputError: I is empty.
    """
    if not c.roots:
        raise InputError("The zero subbundle has no slope")
    return SlopeReport(degree=degree(basis, c1_weight(c), pol), rank=c.rank)
