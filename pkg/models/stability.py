"""Stability Report Models.

Defines verdicts on T(G/P), destabilizing-polarization search results and
sweep tables.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from engine.schubert import SlopeReport
from models.algebra import CandidateReport
from utils.formatters import format_fraction


class StabilityStatus(str, Enum):
    """Outcome of comparing every proper equivariant subbundle with T(G/P)."""

    STABLE = "equivariantly-stable"
    STRICTLY_SEMISTABLE = "equivariantly-strictly-semistable"
    UNSTABLE = "equivariantly-unstable"


EXIT_CODES = {
    StabilityStatus.STABLE: 0,
    StabilityStatus.STRICTLY_SEMISTABLE: 10,
    StabilityStatus.UNSTABLE: 11,
}
TRUNCATED_EXIT_CODE = 3


class SlopeModel(BaseModel):
    """Serialized :class:`SlopeReport`; ``ratio`` is unreduced."""

    degree: int
    rank: int
    ratio: str
    slope: str

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_report(cls, report: SlopeReport) -> "SlopeModel":
        return cls(
            degree=report.degree,
            rank=report.rank,
            ratio=report.ratio,
            slope=format_fraction(report.slope),
        )


class Witness(BaseModel):
    """A closed subset together with its slope."""

    candidate: CandidateReport
    slope: SlopeModel


class CharNote(BaseModel):
    """Admissibility of the characteristic and the annotations it triggers."""

    characteristic: int
    admissible: bool
    min_admissible_char: int
    frobenius: Optional[str] = None
    notes: List[str] = Field(default_factory=list)


class StabilityVerdict(BaseModel):
    """Verdict on T(G/P) against one polarization.

    ``status`` is None exactly when a resource cap truncated the run.
    """

    type: str
    levi: List[int]
    characteristic: int
    polarization: List[int]
    polarization_kind: str  # "anticanonical" or "custom"
    status: Optional[StabilityStatus] = None
    truncated: bool = False
    tangent_slope: Optional[SlopeModel] = None
    proper_candidates: Optional[int] = None
    max_proper_slope: Optional[str] = None
    witnesses: List[Witness] = Field(default_factory=list)
    char_note: CharNote
    scope: str
    caps: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.truncated or self.status is None:
            return TRUNCATED_EXIT_CODE
        return EXIT_CODES[self.status]


class PolarizationWitness(BaseModel):
    """A polarization under which M(I) has larger slope than T(G/P)."""

    polarization: List[int]
    candidate: CandidateReport
    slope: SlopeModel
    tangent_slope: SlopeModel


class SearchReport(BaseModel):
    """Exhaustive scan of primitive ample polarizations in [1, max_coeff]^r."""

    type: str
    levi: List[int]
    characteristic: int
    max_coeff: int
    scanned: int
    proper_candidates: int
    witnesses: List[PolarizationWitness] = Field(default_factory=list)


class SweepRow(BaseModel):
    """One homogeneous space of a sweep."""

    type: str
    levi: List[int]
    dimension: int
    status: Optional[StabilityStatus] = None
    truncated: bool = False
    proper_candidates: Optional[int] = None
    tangent_slope: Optional[str] = None
    max_proper_slope: Optional[str] = None


class SweepReport(BaseModel):
    """Anticanonical verdicts over every type and Levi subset up to a rank."""

    max_rank: int
    characteristic: int
    rows: List[SweepRow] = Field(default_factory=list)
    totals: Dict[str, int] = Field(default_factory=dict)
    all_stable: bool
