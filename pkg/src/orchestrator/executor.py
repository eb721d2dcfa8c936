"""Staged analysis pipeline for one arrangement."""
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
import logging
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from pydantic import BaseModel, Field

from src import catalog
from src.arithmetic.lseries import lseries
from src.arrangement.forms import Arrangement
from src.arrangement.incidence import IncidenceData, classify, validate
from src.arrangement.parse import load, parse
from src.deformations.equisingular import DEFAULT_RANK_SEED, deformation_summary
from src.errors import AdmissibilityError, OcticError, ParseError, StageError
from src.invariants.formulas import euler, picard_rank_Y
from src.invariants.hodge import hodge, hodge_diamond
from src.modularity.newforms import TABLE_PRIMES, match_result
from src.models import (
    AdmissibilityVerdict, ExecutionLogEntry, InvariantSet, LocusEntry, Report, Run, RunStatus, StageStatus
)

logger = logging.getLogger(__name__)


class PipelineConfig(BaseModel):
    """Tunable knobs of the pipeline."""

    threads: int = Field(1, ge=1)
    chunks: Optional[int] = Field(None, ge=1)
    exact_rank: bool = False
    rank_primes: int = Field(2, ge=1)
    rank_seed: int = DEFAULT_RANK_SEED
    point_strata_min_multiplicity: int = Field(3, ge=3, le=4)
    primes: List[int] = Field(default_factory=lambda: list(TABLE_PRIMES))


class Stage(str, Enum):
    CLASSIFY = "classify"
    INVARIANTS = "invariants"
    DEFORMATIONS = "deformations"
    LSERIES = "lseries"
    MODULARITY = "modularity"


STAGE_ORDER = list(Stage)


@dataclass
class PipelineResult:
    """Report, stage log and the error that stopped the pipeline, if any."""

    report: Report
    log: List[ExecutionLogEntry] = field(default_factory=list)
    error: Optional[Exception] = None
    incidence: Optional[IncidenceData] = None

    def raise_for_error(self) -> "PipelineResult":
        if self.error is not None:
            raise self.error
        return self


class Pipeline:
    """Runs classify, invariants, deformations, lseries and modularity in order."""

    def __init__(self, config: Optional[PipelineConfig] = None):
        self.config = config or PipelineConfig()

    def resolve(self, source: Mapping[str, Any]) -> Arrangement:
        """
        Build the arrangement named by a request.

        Args:
            source: One of {"catalog": key}, {"file": path} or {"document": {...}},
                optionally with "params" and "scale"

        Returns:
            The arrangement

        Raises:
            ParseError: If no source is given or the document is malformed
            CatalogError: If the catalog key is unknown
        """
        params = source.get("params") or None
        scale = source.get("scale")
        if source.get("catalog") is not None:
            return catalog.get(str(source["catalog"]), params, scale)
        if source.get("file") is not None:
            return load(source["file"], params, scale)
        if source.get("document") is not None:
            return parse(source["document"], params, scale)
        raise ParseError("Give a catalog key, a file or an arrangement document")

    def analyze(
        self,
        arrangement: Arrangement,
        primes: Optional[Sequence[int]] = None,
        through: Stage = Stage.MODULARITY,
    ) -> PipelineResult:
        """
        Run the stages up to and including `through`.

        The arithmetic stages only run when primes are given. A failing stage
        stops the pipeline; its exception is kept on the result.

        Args:
            arrangement: Arrangement to analyze
            primes: Primes for point counting, none to skip counting
            through: Last stage to run

        Returns:
            PipelineResult with the partial or complete report
        """
        report = Report(
            name=arrangement.name,
            equation=arrangement.equation(),
            scale=arrangement.scale,
            admissibility=AdmissibilityVerdict(admissible=False, reason="not classified"),
        )
        result = PipelineResult(report=report)
        context: Dict[str, Any] = {"arrangement": arrangement, "primes": list(primes or [])}

        stages: Dict[Stage, Callable[[Dict[str, Any], Report], None]] = {
            Stage.CLASSIFY: self._classify,
            Stage.INVARIANTS: self._invariants,
            Stage.DEFORMATIONS: self._deformations,
            Stage.LSERIES: self._lseries,
            Stage.MODULARITY: self._modularity,
        }
        last = STAGE_ORDER.index(through)
        for stage in STAGE_ORDER[: last + 1]:
            entry = ExecutionLogEntry(stage=stage.value, status=StageStatus.RUNNING)
            if stage in (Stage.LSERIES, Stage.MODULARITY) and not context["primes"]:
                entry.status = StageStatus.SKIPPED
                entry.completed_at = _now()
                result.log.append(entry)
                continue
            try:
                stages[stage](context, report)
                entry.status = StageStatus.COMPLETED
            except OcticError as e:
                entry.status = StageStatus.FAILED
                entry.error = f"{type(e).__name__}: {e}"
                result.error = e
                logger.warning("Stage %s failed for %s: %s", stage.value, arrangement.name, e)
            except Exception as e:
                entry.status = StageStatus.FAILED
                entry.error = f"{type(e).__name__}: {e}"
                result.error = StageError(stage.value, e)
                logger.exception("Stage %s crashed for %s", stage.value, arrangement.name)
            entry.completed_at = _now()
            result.log.append(entry)
            if result.error is not None:
                break

        result.incidence = context.get("incidence")
        return result

    def execute_run(self, run: Run) -> Run:
        """
        Execute a stored run request and record its report and stage log.

        Args:
            run: Run whose arrangement field holds the request source

        Returns:
            The updated run
        """
        run.status = RunStatus.RUNNING
        try:
            arrangement = self.resolve(run.arrangement)
            result = self.analyze(arrangement, run.primes)
            run.report = result.report
            run.execution_log.extend(result.log)
            if result.error is not None:
                run.status = RunStatus.FAILED
                run.error = f"{type(result.error).__name__}: {result.error}"
            else:
                run.status = RunStatus.COMPLETED
        except Exception as e:
            run.status = RunStatus.FAILED
            run.error = f"{type(e).__name__}: {e}"
        run.completed_at = _now()
        return run

    # ------------------------------------------------------------------
    # Stages
    # ------------------------------------------------------------------

    def _classify(self, context: Dict[str, Any], report: Report) -> None:
        arrangement = context["arrangement"]
        incidence = classify(arrangement)
        context["incidence"] = incidence
        report.admissibility = validate(incidence)
        report.counters = incidence.counters
        report.loci = _loci(incidence)
        logger.info("Classified %s: %s", arrangement.name, incidence.counters.as_tuple())
        if not report.admissibility.admissible:
            raise AdmissibilityError(
                f"{arrangement.name}: {report.admissibility.reason}", report.admissibility.locus
            )

    def _invariants(self, context: Dict[str, Any], report: Report) -> None:
        arrangement = context["arrangement"]
        c = context["incidence"].counters
        degrees = (1,) * arrangement.degree
        context["e"] = euler(degrees, c.p4_0, c.p4_1, c.p5_0, c.p5_1, c.p5_2, c.l3)
        context["rho"] = picard_rank_Y(len(degrees), c.p4_0, c.p4_1, c.p5_0, c.p5_1, c.p5_2, c.l3)

    def _deformations(self, context: Dict[str, Any], report: Report) -> None:
        summary = deformation_summary(
            context["arrangement"],
            context["incidence"],
            exact=self.config.exact_rank,
            rank_primes=self.config.rank_primes,
            rank_seed=self.config.rank_seed,
            min_point_multiplicity=self.config.point_strata_min_multiplicity,
            threads=self.config.threads,
        )
        report.deformation = summary
        h11, skew = hodge(context["e"], summary.h12, context["rho"])
        invariants = InvariantSet(
            counters=context["incidence"].counters, e=context["e"], rho_Y=context["rho"],
            h11=h11, h12=summary.h12, skew_rank=skew,
        )
        report.invariants = invariants
        report.hodge_diamond = hodge_diamond(invariants.h11, invariants.h12)

    def _lseries(self, context: Dict[str, Any], report: Report) -> None:
        report.lseries = lseries(
            context["arrangement"],
            context["primes"],
            report.invariants,
            context["incidence"],
            threads=self.config.threads,
            chunks=self.config.chunks,
        )

    def _modularity(self, context: Dict[str, Any], report: Report) -> None:
        report.modularity = match_result({record.p: record.a_p for record in report.lseries})


def _now() -> datetime:
    return datetime.now(timezone.utc)


def _loci(incidence: IncidenceData) -> List[LocusEntry]:
    entries = [
        LocusEntry(kind=pt.tag(), locus=str(pt.point), planes=sorted(pt.planes))
        for pt in incidence.points
        if pt.multiplicity >= 4
    ]
    entries += [
        LocusEntry(kind="triple line", locus=str(line), planes=sorted(line.planes))
        for line in incidence.triple_lines
    ]
    return entries
