"""Integral Root Data.

Builds the root datum of a simple root system from its Dynkin data and
answers pairing, reflection and Weyl-group queries. All vectors are kept as
integer tuples:

  - roots in simple-root coordinates (the alpha_i basis),
  - weights in fundamental-weight coordinates (the varpi_i basis).

Simple roots are numbered as in Bourbaki (see config/conventions.yml) and
every public function takes 1-based indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from config.conventions import get_rank_rule
from core.errors import InputError, ResourceError
from utils.logger import get_logger

Root = Tuple[int, ...]

_logger = get_logger("engine.rootsys")

DEFAULT_WEYL_CAP = 1_000_000


@dataclass(frozen=True)
class SimpleType:
    """A Cartan type such as ``A2`` or ``F4``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        rule = get_rank_rule(self.family)
        if rule is None:
            raise InputError(f"Unknown Cartan family '{self.family}'")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InputError(f"Rank must be an integer, got {self.rank!r}")
        if "ranks" in rule:
            if self.rank not in rule["ranks"]:
                raise InputError(
                    f"Type {self.family} exists only in ranks {rule['ranks']}, got {self.rank}"
                )
        elif self.rank < rule.get("min_rank", 1):
            raise InputError(
                f"Type {self.family} needs rank >= {rule['min_rank']}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse a label such as ``"C3"``."""
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise InputError(f"Cannot parse Cartan type '{text}'")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """An integral weight in fundamental-weight coordinates."""

    fw_coords: Tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fw_coords, other.fw_coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fw_coords, other.fw_coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fw_coords))

    def scale(self, factor: int) -> "Weight":
        return Weight(tuple(factor * a for a in self.fw_coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, index: int) -> "Weight":
        """The fundamental weight varpi_index (1-based)."""
        return cls(tuple(1 if i == index - 1 else 0 for i in range(rank)))


def _dynkin_form(family: str, n: int) -> List[List[int]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, scaled to integers.

    Short roots have squared length 2; long roots 4 (6 in G2).
    """
    gram = [[0] * n for _ in range(n)]

    def bond(i: int, j: int, value: int) -> None:
        gram[i - 1][j - 1] = value
        gram[j - 1][i - 1] = value

    if family == "A":
        norms = [2] * n
        for i in range(1, n):
            bond(i, i + 1, -1)
    elif family == "B":
        norms = [4] * (n - 1) + [2]
        for i in range(1, n):
            bond(i, i + 1, -2)
    elif family == "C":
        norms = [2] * (n - 1) + [4]
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
        bond(n - 1, n, -2)
    elif family == "D":
        norms = [2] * n
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
        bond(n - 2, n, -1)
    elif family == "E":
        norms = [2] * n
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)):
            if j <= n:
                bond(i, j, -1)
    elif family == "F":
        norms = [4, 4, 2, 2]
        bond(1, 2, -2)
        bond(2, 3, -2)
        bond(3, 4, -1)
    elif family == "G":
        norms = [2, 6]
        bond(1, 2, -3)
    else:
        raise InputError(f"Unknown Cartan family '{family}'")

    for i in range(n):
        gram[i][i] = norms[i]
    return gram


# Simple roots in the Bourbaki e_i realization (display only)
def _euclidean_simple_roots(family: str, n: int) -> List[Tuple[int, ...]]:
    def e(*entries: Tuple[int, int]) -> Tuple[int, ...]:
        vec = [0] * n
        for index, value in entries:
            vec[index] += value
        return tuple(vec)

    simple = [e((i, 1), (i + 1, -1)) for i in range(n - 1)]
    if family == "B":
        simple.append(e((n - 1, 1)))
    elif family == "C":
        simple.append(e((n - 1, 2)))
    elif family == "D":
        simple.append(e((n - 2, 1), (n - 1, 1)))
    else:
        raise InputError(f"No Euclidean realization is provided for type {family}")
    return simple


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element stored as a reduced word.

    ``images[j]`` is w(alpha_{j+1}); two elements are equal exactly when
    they act identically on the roots.
    """

    word: Tuple[int, ...]
    images: Tuple[Root, ...] = field(repr=False)

    @classmethod
    def from_word(cls, rs: "RootSystem", word: Sequence[int]) -> "WeylElement":
        """Build w = s_{word[0]} ... s_{word[-1]} (indices 1-based)."""
        images = tuple(rs.simple_root(j) for j in range(1, rs.rank + 1))
        for index in reversed(word):
            images = tuple(rs.reflect(image, index) for image in images)
        return cls(tuple(word), images)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, vec: Root) -> Root:
        """Apply w to a vector in simple-root coordinates."""
        out = [0] * len(vec)
        for coeff, image in zip(vec, self.images):
            if coeff:
                for i, value in enumerate(image):
                    out[i] += coeff * value
        return tuple(out)

    def left_multiply(self, rs: "RootSystem", index: int) -> "WeylElement":
        """Return s_index * w."""
        return WeylElement(
            (index,) + self.word,
            tuple(rs.reflect(image, index) for image in self.images),
        )

    def permutation(self, rs: "RootSystem") -> Tuple[int, ...]:
        """The induced permutation of ``rs.roots`` (positions)."""
        return tuple(rs.root_index(self.act(root)) for root in rs.roots)

    def inversion_count(self, rs: "RootSystem") -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for root in rs.positive_roots if rs.is_negative(self.act(root)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)


class RootSystem:
    """Immutable integral root datum of a simple type.

    Attributes:
        simple_type: The Cartan type.
        cartan: ``cartan[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki convention).
        roots: All roots, sorted.
        positive_roots: The positive roots, sorted by height then coordinates.
        highest_root: The unique maximal root theta.
    """

    def __init__(self, simple_type: SimpleType) -> None:
        self.simple_type = simple_type
        self.rank = simple_type.rank
        n = self.rank
        self._gram = _dynkin_form(simple_type.family, n)
        self._norms = tuple(self._gram[i][i] for i in range(n))
        self.cartan: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(2 * self._gram[i][j] // self._norms[j] for j in range(n)) for i in range(n)
        )

        found = self._close_under_reflections()
        positives = sorted(
            (r for r in found if self.is_positive(r)), key=lambda r: (sum(r), r)
        )
        self.positive_roots: Tuple[Root, ...] = tuple(positives)
        self.negative_roots: Tuple[Root, ...] = tuple(self.negate(r) for r in positives)
        self.roots: Tuple[Root, ...] = tuple(sorted(found))
        self._root_set: FrozenSet[Root] = frozenset(found)
        self._root_index: Dict[Root, int] = {r: i for i, r in enumerate(self.roots)}
        self.highest_root: Root = positives[-1]

        _logger.debug(
            "built_root_system",
            type=str(simple_type),
            roots=len(self.roots),
        )

    def _close_under_reflections(self) -> FrozenSet[Root]:
        found = set()
        queue = deque()
        for i in range(1, self.rank + 1):
            for root in (self.simple_root(i), self.negate(self.simple_root(i))):
                found.add(root)
                queue.append(root)
        while queue:
            root = queue.popleft()
            for i in range(1, self.rank + 1):
                image = self.reflect(root, i)
                if image not in found:
                    found.add(image)
                    queue.append(image)
        return frozenset(found)

    # ------------------------------------------------------------------
    # Basic vector helpers
    # ------------------------------------------------------------------

    def simple_root(self, index: int) -> Root:
        return tuple(1 if i == index - 1 else 0 for i in range(self.rank))

    @staticmethod
    def negate(vec: Root) -> Root:
        return tuple(-a for a in vec)

    @staticmethod
    def add(a: Root, b: Root, times: int = 1) -> Root:
        return tuple(x + times * y for x, y in zip(a, b))

    @staticmethod
    def is_positive(vec: Root) -> bool:
        return any(vec) and all(a >= 0 for a in vec)

    @staticmethod
    def is_negative(vec: Root) -> bool:
        return any(vec) and all(a <= 0 for a in vec)

    @staticmethod
    def height(vec: Root) -> int:
        return sum(vec)

    def is_root(self, vec: Root) -> bool:
        return tuple(vec) in self._root_set

    def root_index(self, root: Root) -> int:
        return self._root_index[root]

    def support(self, vec: Root) -> FrozenSet[int]:
        """1-based simple indices with a nonzero coefficient."""
        return frozenset(i + 1 for i, a in enumerate(vec) if a)

    def norm(self, vec: Root) -> int:
        return self.inner(vec, vec)

    def inner(self, a: Root, b: Root) -> int:
        """The invariant form on the root lattice."""
        total = 0
        for i, x in enumerate(a):
            if x:
                row = self._gram[i]
                for j, y in enumerate(b):
                    if y:
                        total += x * y * row[j]
        return total

    def reflect(self, vec: Root, index: int) -> Root:
        """Apply the simple reflection s_index to a root-lattice vector."""
        i = index - 1
        pairing = sum(vec[j] * self.cartan[j][i] for j in range(self.rank))
        if not pairing:
            return vec
        return tuple(a - pairing if k == i else a for k, a in enumerate(vec))

    def reflect_weight(self, weight: Weight, index: int) -> Weight:
        """Apply s_index to a weight in fundamental-weight coordinates."""
        value = weight.fw_coords[index - 1]
        if not value:
            return weight
        row = self.cartan[index - 1]
        return Weight(tuple(a - value * c for a, c in zip(weight.fw_coords, row)))

    # ------------------------------------------------------------------
    # Pairings and conversions
    # ------------------------------------------------------------------

    def to_weight(self, vec: Root) -> Weight:
        """Express a root-lattice vector in fundamental-weight coordinates."""
        coords = [0] * self.rank
        for j, coeff in enumerate(vec):
            if coeff:
                row = self.cartan[j]
                for i in range(self.rank):
                    coords[i] += coeff * row[i]
        return Weight(tuple(coords))

    def coroot_coefficients(self, alpha: Root) -> Tuple[int, ...]:
        """alpha^vee in the basis of simple coroots."""
        norm = self.norm(alpha)
        coeffs = []
        for c, n_i in zip(alpha, self._norms):
            value, rem = divmod(c * n_i, norm)
            if rem:
                raise InputError(f"{alpha} has a non-integral coroot")
            coeffs.append(value)
        return tuple(coeffs)

    def pairing(self, lam: Union[Weight, Root], alpha: Root) -> int:
        """Return <lam, alpha^vee> exactly.

        Args:
            lam: A Weight (fundamental-weight basis) or a root-lattice vector.
            alpha: A root of this system.

        Raises:
            InputError: alpha is not a root.
        """
        alpha = tuple(alpha)
        if alpha not in self._root_set:
            raise InputError(f"{alpha} is not a root of {self.simple_type}")
        if isinstance(lam, Weight):
            return sum(
                a * c for a, c in zip(lam.fw_coords, self.coroot_coefficients(alpha))
            )
        value, rem = divmod(2 * self.inner(tuple(lam), alpha), self.norm(alpha))
        if rem:
            raise InputError(f"{lam} does not pair integrally with {alpha}")
        return value

    def max_coroot_pairing(self) -> int:
        """Largest <beta, alpha^vee> over pairs of roots alpha != beta."""
        best = 0
        for alpha in self.positive_roots:
            for beta in self.roots:
                if beta != alpha:
                    best = max(best, self.pairing(beta, alpha))
        return best

    def euclidean(self, vec: Root) -> Tuple[int, ...]:
        """Coordinates in the e_i basis of the Bourbaki plates (types B, C, D)."""
        simple = _euclidean_simple_roots(self.simple_type.family, self.rank)
        out = [0] * self.rank
        for coeff, image in zip(vec, simple):
            for i, value in enumerate(image):
                out[i] += coeff * value
        return tuple(out)

    @property
    def lie_algebra_dimension(self) -> int:
        return len(self.roots) + self.rank

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.simple_type == other.simple_type

    def __hash__(self) -> int:
        return hash(self.simple_type)

    def __repr__(self) -> str:
        return f"RootSystem({self.simple_type})"


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Build (and memoize) the root datum of a simple type."""
    return RootSystem(t)


def highest_root(rs: RootSystem) -> Root:
    """Return theta; theta + alpha_i is never a root."""
    return rs.highest_root


def pairing(rs: RootSystem, lam: Union[Weight, Root], alpha: Root) -> int:
    """Module-level alias of :meth:`RootSystem.pairing`."""
    return rs.pairing(lam, alpha)


def normalize_levi(rs: RootSystem, levi: Iterable[int]) -> FrozenSet[int]:
    """Validate a set of 1-based simple indices."""
    indices = frozenset(int(i) for i in levi)
    bad = sorted(i for i in indices if not 1 <= i <= rs.rank)
    if bad:
        raise InputError(f"Simple indices {bad} are outside 1..{rs.rank}")
    return indices


def coset_orbit(
    rs: RootSystem,
    levi: Iterable[int],
    cap: Optional[int] = DEFAULT_WEYL_CAP,
) -> List[Tuple[Weight, WeylElement]]:
    """Minimal coset representatives of W / W_levi paired with w(rho_P).

    The orbit of rho_P = sum of the fundamental weights off the Levi is walked
    from the dominant chamber; a step s_i is taken from mu when
    <mu, alpha_i^vee> > 0, which lengthens the representative by one.

    Returns:
        ``(w(rho_P), w)`` pairs sorted by length, then by word.

    Raises:
        ResourceError: The orbit outgrows ``cap``.
    """
    levi = normalize_levi(rs, levi)
    start = Weight(tuple(0 if i + 1 in levi else 1 for i in range(rs.rank)))
    identity = WeylElement.from_word(rs, ())
    seen: Dict[Weight, WeylElement] = {start: identity}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        w = seen[mu]
        for index in range(1, rs.rank + 1):
            if mu.fw_coords[index - 1] > 0:
                nu = rs.reflect_weight(mu, index)
                if nu not in seen:
                    seen[nu] = w.left_multiply(rs, index)
                    queue.append(nu)
                    if cap is not None and len(seen) > cap:
                        raise ResourceError(
                            f"W^P for {rs.simple_type} with Levi {sorted(levi)} exceeds {cap} elements",
                            cap=cap,
                            reached=len(seen),
                        )
    orbit = sorted(seen.items(), key=lambda item: (item[1].length, item[1].word))
    _logger.debug("coset_orbit", type=str(rs.simple_type), levi=sorted(levi), size=len(orbit))
    return orbit


def minimal_coset_reps(
    rs: RootSystem,
    levi: Iterable[int],
    cap: Optional[int] = DEFAULT_WEYL_CAP,
) -> List[WeylElement]:
    """All minimal-length representatives of W / W_levi, sorted by length."""
    return [w for _, w in coset_orbit(rs, levi, cap)]


def weyl_group_order(rs: RootSystem, subset: Optional[Iterable[int]] = None) -> int:
    """Order of the parabolic subgroup W_subset (all of W by default).

    Uses |W_S| = |W_S . varpi_j| * |W_{S - j}| with j = max(S), so no orbit
    larger than a single fundamental-weight orbit is ever built.
    """
    indices = sorted(
        normalize_levi(rs, subset) if subset is not None else range(1, rs.rank + 1)
    )
    order = 1
    while indices:
        j = indices[-1]
        start = Weight.fundamental(rs.rank, j)
        seen = {start}
        queue = deque([start])
        while queue:
            mu = queue.popleft()
            for index in indices:
                nu = rs.reflect_weight(mu, index)
                if nu not in seen:
                    seen.add(nu)
                    queue.append(nu)
        order *= len(seen)
        indices.pop()
    return order
