"""Parabolic Data and Equivariant Subbundles.

A standard parabolic P is given by its Levi subset S of simple indices. The
tangent space at the base point of G/P is g/p, whose weights are the
negative roots with a nonzero coefficient off S. A T-stable subspace M(I)
spanned by a subset I of those roots is a P-submodule exactly when I is
closed under the steps alpha -> alpha + k*beta (beta a root of P) whose
coefficient survives in the characteristic:

  - characteristic zero: the k = 1 steps (every one survives),
  - characteristic p: every divided-power step with coefficient != 0 mod p.

Closed subsets are the successor-closed sets of the reachability digraph;
they are enumerated on its condensation with networkx.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from config.conventions import get_exceptional_vector_fields
from core.errors import InputError, ResourceError
from engine.chevalley import CharMode, divided_power_coefficient, string_data
from engine.rootsys import Root, RootSystem, SimpleType, Weight, build_root_system, normalize_levi
from utils.logger import get_logger

_logger = get_logger("engine.parabolic")

DEFAULT_SUBMODULE_CAP = 1_000_000
BRUTE_FORCE_MAX_DIM = 20


@dataclass(frozen=True, eq=False)
class ParabolicData:
    """A standard parabolic subgroup and its tangent roots.

    Attributes:
        rs: The ambient root system.
        levi: Levi subset S (1-based simple indices).
        ip: I(P), the roots of P: all positive roots and the negative roots
            supported on S.
        tangent: R minus I(P), sorted.
    """

    rs: RootSystem
    levi: FrozenSet[int]
    ip: FrozenSet[Root]
    tangent: Tuple[Root, ...]

    @property
    def simple_type(self) -> SimpleType:
        return self.rs.simple_type

    @property
    def crossed(self) -> Tuple[int, ...]:
        """Simple indices off the Levi, increasing."""
        return tuple(i for i in range(1, self.rs.rank + 1) if i not in self.levi)

    @property
    def dimension(self) -> int:
        return len(self.tangent)

    @property
    def picard_rank(self) -> int:
        return len(self.crossed)

    @property
    def is_degenerate(self) -> bool:
        """True for P = G."""
        return not self.crossed

    @property
    def tangent_set(self) -> FrozenSet[Root]:
        return frozenset(self.tangent)

    def full(self) -> "SubmoduleCandidate":
        return SubmoduleCandidate(self, frozenset(self.tangent))

    @property
    def anticanonical_weight(self) -> Weight:
        """c1 of the tangent bundle: the sum of the positive roots off the Levi."""
        return c1_weight(self.full())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParabolicData):
            return NotImplemented
        return self.rs == other.rs and self.levi == other.levi

    def __hash__(self) -> int:
        return hash((self.rs, self.levi))

    def __repr__(self) -> str:
        return f"ParabolicData({self.rs.simple_type}, levi={sorted(self.levi)})"


@dataclass(frozen=True)
class SubmoduleCandidate:
    """A subset I of tangent roots, standing for M(I) inside g/p."""

    pd: ParabolicData
    roots: FrozenSet[Root]

    def __post_init__(self) -> None:
        stray = self.roots - self.pd.tangent_set
        if stray:
            raise InputError(f"{sorted(stray)} are not tangent roots of {self.pd}")

    @property
    def rank(self) -> int:
        return len(self.roots)

    @property
    def sorted_roots(self) -> Tuple[Root, ...]:
        return tuple(sorted(self.roots))

    @property
    def is_proper(self) -> bool:
        return 0 < self.rank < self.pd.dimension

    @property
    def c1_weight(self) -> Weight:
        return c1_weight(self)

    def sort_key(self) -> Tuple[int, Tuple[Root, ...]]:
        return (self.rank, self.sorted_roots)


@dataclass(frozen=True)
class ReachabilityStep:
    """One step alpha -> alpha + k*beta with its coefficient magnitude."""

    source: Root
    target: Root
    beta: Root
    k: int
    coefficient: int


@dataclass(frozen=True)
class VectorFieldAlgebra:
    """The Lie algebra H^0(G/P, T(G/P)) of global vector fields."""

    kind: str  # "adjoint" or "exceptional"
    name: str
    dimension: int


def tangent_roots(rs: RootSystem, levi: Iterable[int]) -> ParabolicData:
    """Split the roots into I(P) and the tangent roots of G/P."""
    levi = normalize_levi(rs, levi)
    ip = set(rs.positive_roots)
    tangent = []
    for root in rs.negative_roots:
        if rs.support(root) <= levi:
            ip.add(root)
        else:
            tangent.append(root)
    return ParabolicData(rs, levi, frozenset(ip), tuple(sorted(tangent)))


def c1_weight(c: SubmoduleCandidate) -> Weight:
    """Determinant weight of M(I): minus the sum of its roots."""
    rs = c.pd.rs
    total = (0,) * rs.rank
    for root in c.roots:
        total = rs.add(total, root, -1)
    return rs.to_weight(total)


@lru_cache(maxsize=1024)
def reachability_steps(pd: ParabolicData, mode: CharMode) -> Tuple[ReachabilityStep, ...]:
    """All steps that a closed subset must respect, in deterministic order."""
    rs = pd.rs
    tangent = pd.tangent_set
    betas = sorted(pd.ip)
    steps: List[ReachabilityStep] = []
    for alpha in pd.tangent:
        negative_alpha = rs.negate(alpha)
        for beta in betas:
            if beta == alpha or beta == negative_alpha:
                continue
            up = string_data(rs, alpha, beta).up_length
            max_k = 1 if mode.is_zero else up
            for k in range(1, min(up, max_k) + 1):
                target = rs.add(alpha, beta, k)
                if target not in tangent:
                    continue
                coefficient = divided_power_coefficient(rs, alpha, beta, k)
                if mode.kills(coefficient):
                    continue
                steps.append(ReachabilityStep(alpha, target, beta, k, coefficient))
    return tuple(steps)


def reachability_graph(pd: ParabolicData, mode: CharMode) -> nx.DiGraph:
    """Digraph on the tangent roots with an edge for every surviving step."""
    graph = nx.DiGraph()
    graph.add_nodes_from(pd.tangent)
    for step in reachability_steps(pd, mode):
        graph.add_edge(step.source, step.target)
    return graph


def _successors(pd: ParabolicData, mode: CharMode) -> Dict[Root, FrozenSet[Root]]:
    out: Dict[Root, Set[Root]] = {root: set() for root in pd.tangent}
    for step in reachability_steps(pd, mode):
        out[step.source].add(step.target)
    return {root: frozenset(targets) for root, targets in out.items()}


def is_closed(c: SubmoduleCandidate, mode: CharMode) -> bool:
    """Whether M(I) is a P-submodule of g/p in the given characteristic."""
    for step in reachability_steps(c.pd, mode):
        if step.source in c.roots and step.target not in c.roots:
            return False
    return True


def enumerate_submodules(
    pd: ParabolicData,
    mode: CharMode,
    cap: Optional[int] = DEFAULT_SUBMODULE_CAP,
) -> Iterator[SubmoduleCandidate]:
    """Yield every closed subset (including the empty and full ones) once.

    Strongly connected components of the reachability digraph are collapsed
    first. Each component is then either taken, which forces all of its
    descendants in, or left out, which forces all of its ancestors out; both
    branches always complete, so every leaf is a distinct closed subset.
    Output is sorted by (rank, sorted root coordinates).

    Raises:
        ResourceError: More than ``cap`` closed subsets exist.
    """
    graph = reachability_graph(pd, mode)
    dag = nx.condensation(graph)
    members = {node: frozenset(dag.nodes[node]["members"]) for node in dag.nodes}
    order = sorted(dag.nodes, key=lambda node: min(members[node]))
    below = {node: frozenset(nx.descendants(dag, node)) for node in order}
    above = {node: frozenset(nx.ancestors(dag, node)) for node in order}

    found: List[FrozenSet[int]] = []

    def branch(position: int, taken: FrozenSet[int], dropped: FrozenSet[int]) -> None:
        while position < len(order) and (order[position] in taken or order[position] in dropped):
            position += 1
        if position == len(order):
            found.append(taken)
            if cap is not None and len(found) > cap:
                raise ResourceError(
                    f"More than {cap} closed subsets for {pd} in characteristic {mode}",
                    cap=cap,
                    reached=len(found),
                )
            return
        node = order[position]
        branch(position + 1, taken | {node} | below[node], dropped)
        branch(position + 1, taken, dropped | {node} | above[node])

    branch(0, frozenset(), frozenset())
    _logger.debug(
        "enumerated_submodules",
        space=repr(pd),
        characteristic=str(mode),
        components=len(order),
        count=len(found),
    )

    candidates = [
        SubmoduleCandidate(pd, frozenset().union(*(members[node] for node in chosen)))
        for chosen in found
    ]
    candidates.sort(key=SubmoduleCandidate.sort_key)
    yield from candidates


def brute_force_submodules(pd: ParabolicData, mode: CharMode) -> List[SubmoduleCandidate]:
    """Filter all 2^dim subsets through :func:`is_closed` (test oracle)."""
    if pd.dimension > BRUTE_FORCE_MAX_DIM:
        raise InputError(f"Brute force is limited to dim <= {BRUTE_FORCE_MAX_DIM}")
    successors = _successors(pd, mode)
    closed = []
    for size in range(pd.dimension + 1):
        for subset in combinations(pd.tangent, size):
            chosen = frozenset(subset)
            if all(successors[root] <= chosen for root in chosen):
                closed.append(SubmoduleCandidate(pd, chosen))
    closed.sort(key=SubmoduleCandidate.sort_key)
    return closed


def _matrix_size(entry: Dict[str, object], rank: int) -> int:
    return int(entry.get("per_rank", 0)) * rank + int(entry.get("offset", 0))


def _algebra_dimension(algebra: str, size: int) -> int:
    if algebra == "sl":
        return size * size - 1
    if algebra == "so":
        return size * (size - 1) // 2
    raise InputError(f"Unknown classical algebra '{algebra}' in conventions.yml")


def demazure_vector_fields(t: SimpleType, levi: Iterable[int]) -> VectorFieldAlgebra:
    """Look up H^0(G/P, T(G/P)).

    The three exceptional cases come from conventions.yml and apply to the
    exact crossed sets listed there; everything else is the adjoint algebra.

    Raises:
        InputError: The Levi subset is all of the simple indices (P = G).
    """
    rs = build_root_system(t)
    levi = normalize_levi(rs, levi)
    crossed = tuple(i for i in range(1, t.rank + 1) if i not in levi)
    if not crossed:
        raise InputError("P = G has no tangent directions")

    for entry in get_exceptional_vector_fields():
        if entry.get("family") != t.family:
            continue
        crossed_rule = entry.get("crossed")
        if crossed_rule == "first":
            wanted: Tuple[int, ...] = (1,)
        elif crossed_rule == "last":
            wanted = (t.rank,)
        else:
            wanted = tuple(sorted(crossed_rule or ()))
        if crossed == wanted:
            size = _matrix_size(entry, t.rank)
            return VectorFieldAlgebra(
                kind="exceptional",
                name=f"{entry['algebra']}({size})",
                dimension=_algebra_dimension(entry["algebra"], size),
            )

    return VectorFieldAlgebra(kind="adjoint", name=f"g({t})", dimension=rs.lie_algebra_dimension)
