"""Stability Service.

Combines submodule enumeration with Schubert-calculus slopes into verdicts
on the tangent bundle of G/P. All comparisons are exact: a proper closed
subset I destabilizes when deg(I) * rank(T) > deg(T) * |I|.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from config.conventions import get_rank_rule, list_families
from config.settings import Settings, get_settings
from core.errors import InputError, ResourceError
from engine.chevalley import CharMode, is_admissible, min_admissible_char
from engine.parabolic import (
    ParabolicData,
    SubmoduleCandidate,
    enumerate_submodules,
    tangent_roots,
)
from engine.rootsys import SimpleType, build_root_system, normalize_levi
from engine.schubert import ChowBasis, Polarization, SlopeReport, slope
from models.algebra import CandidateReport
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
from services.cache_service import ChowCacheService
from utils.formatters import format_fraction
from utils.logger import get_logger

SCOPE_NOTE = (
    "The verdict quantifies over G-equivariant subbundles of T(G/P) only. "
    "G-stable subsheaves of a homogeneous bundle are subbundles, and by uniqueness "
    "of the Harder-Narasimhan filtration equivariant semistability implies semistability; "
    "the passage from equivariant stability to stability is not recomputed here."
)
FROBENIUS_NOTE = (
    "The characteristic is admissible for this type: stability of T(G/P) with respect to "
    "the anticanonical polarization then implies Frobenius stability (annotation only, "
    "no Frobenius pull-back is computed)."
)
NON_ADMISSIBLE_NOTE = (
    "The characteristic is below the admissible threshold for this type: closed subsets "
    "may exist that have no characteristic-zero counterpart; they are reported as found."
)
SEMISTABLE_NOTE = (
    "Equivariant strict semistability in small characteristic is certified only at the "
    "equivariant level; the maximal-slope witnesses are listed."
)

PolarizationInput = Union[None, str, Sequence[int], Polarization]


def sweep_types(max_rank: int) -> List[SimpleType]:
    """Every canonical simple type of rank at most ``max_rank``."""
    types = []
    for family in list_families():
        rule = get_rank_rule(family) or {}
        if "ranks" in rule:
            ranks: Iterable[int] = [n for n in rule["ranks"] if n <= max_rank]
        else:
            low = rule.get("canonical_min_rank", rule.get("min_rank", 1))
            ranks = range(low, max_rank + 1)
        types.extend(SimpleType(family, n) for n in ranks)
    return types


def proper_levi_subsets(rank: int) -> List[Tuple[int, ...]]:
    """All Levi subsets S != {1..rank}, by size then lexicographically."""
    indices = range(1, rank + 1)
    return [subset for size in range(rank) for subset in combinations(indices, size)]


def _shell_vectors(width: int, shell: int) -> List[Tuple[int, ...]]:
    """gcd-1 vectors in [1, shell]^width whose largest entry equals ``shell``."""
    return [
        vector
        for vector in product(range(1, shell + 1), repeat=width)
        if max(vector) == shell and Polarization(vector).primitive().coeffs == vector
    ]


class StabilityService:
    """Verdict engine over the exact-arithmetic engine."""

    def __init__(
        self,
        cache: Optional[ChowCacheService] = None,
        settings: Optional[Settings] = None,
    ) -> None:
        self.settings = settings or get_settings()
        self.cache = cache or ChowCacheService()
        self.logger = get_logger("service.stability")

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def parabolic(self, t: SimpleType, levi: Iterable[int]) -> ParabolicData:
        rs = build_root_system(t)
        return tangent_roots(rs, normalize_levi(rs, levi))

    @staticmethod
    def _require_nondegenerate(pd: ParabolicData) -> None:
        if pd.is_degenerate:
            raise InputError(f"P = G for {pd.simple_type}: G/P is a point")

    @staticmethod
    def resolve_polarization(pd: ParabolicData, pol: PolarizationInput) -> Tuple[Polarization, str]:
        """Turn ``None``/``"anticanonical"``/coefficients into a checked Polarization."""
        if pol is None or (isinstance(pol, str) and pol.strip().lower() == "anticanonical"):
            return Polarization.anticanonical(pd), "anticanonical"
        if isinstance(pol, str):
            raise InputError(f"Unknown polarization '{pol}'")
        polarization = pol if isinstance(pol, Polarization) else Polarization(tuple(int(c) for c in pol))
        polarization.as_weight(pd)
        if not polarization.is_ample:
            raise InputError(f"Polarization {list(polarization.coeffs)} is not ample")
        kind = "anticanonical" if polarization == Polarization.anticanonical(pd) else "custom"
        return polarization, kind

    def _char_note(self, pd: ParabolicData, mode: CharMode, status: Optional[StabilityStatus], kind: str) -> CharNote:
        t = pd.simple_type
        admissible = is_admissible(t, mode)
        notes = []
        frobenius = None
        if not mode.is_zero and admissible and status is StabilityStatus.STABLE and kind == "anticanonical":
            frobenius = FROBENIUS_NOTE
        if not admissible:
            notes.append(NON_ADMISSIBLE_NOTE)
        if not mode.is_zero and status is StabilityStatus.STRICTLY_SEMISTABLE:
            notes.append(SEMISTABLE_NOTE)
        return CharNote(
            characteristic=mode.characteristic,
            admissible=admissible,
            min_admissible_char=min_admissible_char(t),
            frobenius=frobenius,
            notes=notes,
        )

    def _slopes(
        self,
        candidates: Sequence[SubmoduleCandidate],
        pol: Polarization,
        basis: ChowBasis,
    ) -> List[SlopeReport]:
        # Warm the per-generator memo before fanning out
        basis.generator_degrees(pol)
        if self.settings.threads <= 1 or len(candidates) < 2:
            return [slope(c, pol, basis) for c in candidates]
        with ThreadPoolExecutor(max_workers=self.settings.threads) as pool:
            return list(pool.map(lambda c: slope(c, pol, basis), candidates))

    def _proper_candidates(self, pd: ParabolicData, mode: CharMode) -> List[SubmoduleCandidate]:
        return [
            c
            for c in enumerate_submodules(pd, mode, cap=self.settings.submodule_cap)
            if c.is_proper
        ]

    # ------------------------------------------------------------------
    # Operations
    # ------------------------------------------------------------------

    def check_tangent_stability(
        self,
        t: SimpleType,
        levi: Iterable[int],
        mode: CharMode,
        pol: PolarizationInput = None,
    ) -> StabilityVerdict:
        """Compare every proper closed subset's slope with the tangent slope.

        Args:
            t: The simple type.
            levi: Levi subset S (1-based).
            mode: Characteristic.
            pol: ``None`` or ``"anticanonical"`` for -K, else ample coefficients
                over the crossed indices.

        Returns:
            The verdict; truncated with no status when a cap is hit.

        Raises:
            InputError: S is all of the simple indices, or pol is not ample.
        """
        pd = self.parabolic(t, levi)
        self._require_nondegenerate(pd)
        polarization, kind = self.resolve_polarization(pd, pol)
        base = dict(
            type=str(t),
            levi=sorted(pd.levi),
            characteristic=mode.characteristic,
            polarization=list(polarization.coeffs),
            polarization_kind=kind,
            scope=SCOPE_NOTE,
        )

        try:
            basis = self.cache.get_basis(pd)
            proper = self._proper_candidates(pd, mode)
        except ResourceError as exc:
            self.logger.info("stability_truncated", type=str(t), levi=sorted(pd.levi), cap=exc.cap)
            return StabilityVerdict(
                **base,
                truncated=True,
                char_note=self._char_note(pd, mode, None, kind),
                caps=[exc.to_dict()],
            )

        tangent = slope(pd.full(), polarization, basis)
        reports = self._slopes(proper, polarization, basis)

        witnesses: List[Witness] = []
        max_slope: Optional[Fraction] = None
        if reports:
            max_slope = max(r.slope for r in reports)
        if max_slope is None or max_slope < tangent.slope:
            status = StabilityStatus.STABLE
        else:
            status = (
                StabilityStatus.STRICTLY_SEMISTABLE
                if max_slope == tangent.slope
                else StabilityStatus.UNSTABLE
            )
            witnesses = [
                Witness(candidate=CandidateReport.from_candidate(c), slope=SlopeModel.from_report(r))
                for c, r in zip(proper, reports)
                if r.slope == max_slope
            ]

        self.logger.info(
            "stability_verdict",
            type=str(t),
            levi=sorted(pd.levi),
            characteristic=str(mode),
            status=status.value,
            candidates=len(proper),
        )
        return StabilityVerdict(
            **base,
            status=status,
            tangent_slope=SlopeModel.from_report(tangent),
            proper_candidates=len(proper),
            max_proper_slope=format_fraction(max_slope) if max_slope is not None else None,
            witnesses=witnesses,
            char_note=self._char_note(pd, mode, status, kind),
        )

    def search_destabilizing_polarization(
        self,
        t: SimpleType,
        levi: Iterable[int],
        mode: CharMode,
        max_coeff: int,
    ) -> SearchReport:
        """Scan primitive ample polarizations in [1, max_coeff]^r for destabilizers.

        Boxes grow one shell at a time (vectors whose largest entry is m), so
        a cap hit leaves a fully scanned box [1, m-1]^r behind.

        Raises:
            InputError: P = G or max_coeff < 1.
            ResourceError: More than the configured number of polarizations;
                ``details`` names the completed sub-box.
        """
        if max_coeff < 1:
            raise InputError(f"max_coeff must be positive, got {max_coeff}")
        pd = self.parabolic(t, levi)
        self._require_nondegenerate(pd)
        basis = self.cache.get_basis(pd)
        proper = self._proper_candidates(pd, mode)
        full = pd.full()
        cap = self.settings.polarization_cap

        def evaluate(coeffs: Tuple[int, ...]) -> List[PolarizationWitness]:
            pol = Polarization(coeffs)
            tangent = slope(full, pol, basis)
            found = []
            for c in proper:
                report = slope(c, pol, basis)
                if report.slope > tangent.slope:
                    found.append(
                        PolarizationWitness(
                            polarization=list(coeffs),
                            candidate=CandidateReport.from_candidate(c),
                            slope=SlopeModel.from_report(report),
                            tangent_slope=SlopeModel.from_report(tangent),
                        )
                    )
            return found

        witnesses: List[PolarizationWitness] = []
        scanned = 0
        for shell in range(1, max_coeff + 1):
            vectors = _shell_vectors(pd.picard_rank, shell)
            if scanned + len(vectors) > cap:
                raise ResourceError(
                    f"More than {cap} polarizations to scan for {pd}",
                    cap=cap,
                    reached=scanned,
                    details={
                        "completed_max_coeff": shell - 1,
                        "scanned": scanned,
                        "witnesses_in_completed_box": len(witnesses),
                    },
                )
            if self.settings.threads > 1 and len(vectors) > 1:
                with ThreadPoolExecutor(max_workers=self.settings.threads) as pool:
                    batches = list(pool.map(evaluate, vectors))
            else:
                batches = [evaluate(v) for v in vectors]
            for batch in batches:
                witnesses.extend(batch)
            scanned += len(vectors)

        witnesses.sort(key=lambda w: (w.polarization, w.candidate.rank, w.candidate.roots))
        self.logger.info(
            "polarization_search",
            type=str(t),
            levi=sorted(pd.levi),
            scanned=scanned,
            witnesses=len(witnesses),
        )
        return SearchReport(
            type=str(t),
            levi=sorted(pd.levi),
            characteristic=mode.characteristic,
            max_coeff=max_coeff,
            scanned=scanned,
            proper_candidates=len(proper),
            witnesses=witnesses,
        )

    def sweep(self, max_rank: int, mode: CharMode) -> SweepReport:
        """Anticanonical verdicts for every type of rank <= max_rank and every S."""
        if max_rank < 1:
            raise InputError(f"max_rank must be positive, got {max_rank}")
        rows: List[SweepRow] = []
        totals = {status.value: 0 for status in StabilityStatus}
        totals["truncated"] = 0
        for t in sweep_types(max_rank):
            for levi in proper_levi_subsets(t.rank):
                verdict = self.check_tangent_stability(t, levi, mode)
                pd = self.parabolic(t, levi)
                rows.append(
                    SweepRow(
                        type=str(t),
                        levi=list(levi),
                        dimension=pd.dimension,
                        status=verdict.status,
                        truncated=verdict.truncated,
                        proper_candidates=verdict.proper_candidates,
                        tangent_slope=verdict.tangent_slope.ratio if verdict.tangent_slope else None,
                        max_proper_slope=verdict.max_proper_slope,
                    )
                )
                totals["truncated" if verdict.truncated else verdict.status.value] += 1
        all_stable = totals[StabilityStatus.STABLE.value] == len(rows)
        self.logger.info("sweep_complete", max_rank=max_rank, spaces=len(rows), all_stable=all_stable)
        return SweepReport(
            max_rank=max_rank,
            characteristic=mode.characteristic,
            rows=rows,
            totals=totals,
            all_stable=all_stable,
        )
