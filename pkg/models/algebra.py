"""Root System and Submodule Report Models.

Payloads of the rootsys, submodules and demazure commands.
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from engine.parabolic import ParabolicData, SubmoduleCandidate, VectorFieldAlgebra


class RootSystemReport(BaseModel):
    """Summary of a root datum."""

    type: str
    family: str
    rank: int
    root_count: int
    positive_root_count: int
    highest_root: List[int]
    highest_root_euclidean: Optional[List[int]] = None  # types B, C, D only
    cartan_matrix: List[List[int]]
    weyl_order: int
    lie_algebra_dimension: int
    max_coroot_pairing: int
    min_admissible_char: int
    characteristic: Optional[int] = None
    admissible: Optional[bool] = None
    numbering: str


class CandidateReport(BaseModel):
    """One closed subset I with its rank and determinant weight."""

    rank: int
    roots: List[List[int]]
    roots_euclidean: Optional[List[List[int]]] = None
    c1_weight: List[int]
    proper: bool

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_candidate(cls, c: SubmoduleCandidate) -> "CandidateReport":
        rs = c.pd.rs
        euclidean = None
        if rs.simple_type.family in ("B", "C", "D"):
            euclidean = [list(rs.euclidean(root)) for root in c.sorted_roots]
        return cls(
            rank=c.rank,
            roots=[list(root) for root in c.sorted_roots],
            roots_euclidean=euclidean,
            c1_weight=list(c.c1_weight.fw_coords),
            proper=c.is_proper,
        )


class TangentReport(BaseModel):
    """The tangent space g/p at the base point."""

    dimension: int
    picard_rank: int
    levi: List[int]
    crossed: List[int]
    anticanonical_weight: List[int]
    roots: List[List[int]]

    @classmethod
    def from_parabolic(cls, pd: ParabolicData) -> "TangentReport":
        return cls(
            dimension=pd.dimension,
            picard_rank=pd.picard_rank,
            levi=sorted(pd.levi),
            crossed=list(pd.crossed),
            anticanonical_weight=list(pd.anticanonical_weight.fw_coords),
            roots=[list(root) for root in pd.tangent],
        )


class SubmoduleReport(BaseModel):
    """Every closed subset of tangent roots in one characteristic."""

    type: str
    characteristic: int
    tangent: TangentReport
    count: int
    proper_count: int
    candidates: List[CandidateReport] = Field(default_factory=list)


class VectorFieldReport(BaseModel):
    """H^0(G/P, T(G/P)) from the lookup table."""

    type: str
    levi: List[int]
    crossed: List[int]
    kind: str
    name: str
    dimension: int

    @classmethod
    def from_algebra(
        cls, type_label: str, levi: List[int], crossed: List[int], algebra: VectorFieldAlgebra
    ) -> "VectorFieldReport":
        return cls(
            type=type_label,
            levi=levi,
            crossed=crossed,
            kind=algebra.kind,
            name=algebra.name,
            dimension=algebra.dimension,
        )
