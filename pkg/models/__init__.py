"""Parastab Models Module.

Pydantic models for the JSON reports printed by the CLI.
"""

from models.algebra import (
    CandidateReport,
    RootSystemReport,
    SubmoduleReport,
    TangentReport,
    VectorFieldReport,
)
from models.envelope import ReportEnvelope
from models.stability import (
    CharNote,
    PolarizationWitness,
    SearchReport,
    SlopeModel,
    StabilityStatus,
    StabilityVerdict,
    SweepReport,
    SweepRow,
    Witness,
)

__all__ = [
    # Algebra reports
    "CandidateReport",
    "RootSystemReport",
    "SubmoduleReport",
    "TangentReport",
    "VectorFieldReport",
    # Stability reports
    "CharNote",
    "PolarizationWitness",
    "SearchReport",
    "SlopeModel",
    "StabilityStatus",
    "StabilityVerdict",
    "SweepReport",
    "SweepRow",
    "Witness",
    # Envelope
    "ReportEnvelope",
]
