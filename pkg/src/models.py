"""Data models shared by the pipeline, the tools, the CLI and the service."""
from datetime import datetime, timezone
from enum import Enum
from typing import Annotated, Any, Dict, List, Optional
import uuid

from pydantic import BaseModel, Field, PlainSerializer, model_validator

# integers go over the wire as decimal strings (no 64-bit ambiguity for consumers)
IntStr = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class RunStatus(str, Enum):
    """Possible run execution states."""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class StageStatus(str, Enum):
    """Possible pipeline stage states."""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"
    SKIPPED = "skipped"


class IncidenceCounters(BaseModel):
    """Numerical data of an arrangement: p_q^i counts and the triple lines."""

    model_config = {"frozen": True}

    p3: IntStr = 0
    p4_0: IntStr = 0
    p4_1: IntStr = 0
    p5_0: IntStr = 0
    p5_1: IntStr = 0
    p5_2: IntStr = 0
    l3: IntStr = 0

    def as_tuple(self) -> tuple:
        return (self.p3, self.p4_0, self.p4_1, self.p5_0, self.p5_1, self.p5_2, self.l3)


class AdmissibilityVerdict(BaseModel):
    """Outcome of the admissibility check."""

    admissible: bool
    reason: Optional[str] = None
    locus: Optional[str] = None


class PrimeVerdict(BaseModel):
    """Whether a prime is of good reduction for an arrangement."""

    p: IntStr
    good: bool
    reason: Optional[str] = None


class InvariantSet(BaseModel):
    """Topological and Hodge invariants of the resolved double cover."""

    counters: IncidenceCounters
    e: IntStr
    rho_Y: IntStr
    h11: IntStr
    h12: IntStr
    skew_rank: IntStr

    @model_validator(mode="after")
    def _consistent(self) -> "InvariantSet":
        if self.e != 2 * (self.h11 - self.h12):
            raise ValueError(f"e={self.e} differs from 2(h11-h12)={2 * (self.h11 - self.h12)}")
        if self.skew_rank != self.h11 - self.rho_Y or self.skew_rank < 0:
            raise ValueError("skew rank must equal h11 - rho(Y) >= 0")
        return self


class DeformationSummary(BaseModel):
    """Equisingular deformation count and the dimensions it came from."""

    h12: IntStr
    equisingular: IntStr
    dim_jf: IntStr
    dim_ieq: IntStr
    strata: IntStr
    method: str


class CountRecord(BaseModel):
    """Point count of the resolved Calabi-Yau over F_p and the trace a_p."""

    p: IntStr
    raw: IntStr
    line_corr: IntStr
    fourfold_corr: IntStr
    total: IntStr
    a_p: IntStr
    traces: List[IntStr] = Field(default_factory=list)

    @model_validator(mode="after")
    def _totals(self) -> "CountRecord":
        if self.total != self.raw + self.line_corr + self.fourfold_corr:
            raise ValueError("total must equal raw + line_corr + fourfold_corr")
        return self


class ModularityResult(BaseModel):
    """Outcome of matching an a_p vector against the newform table."""

    ap_vector: Dict[IntStr, IntStr]
    matched_label: Optional[str] = None
    best_label: Optional[str] = None
    agreement: Dict[IntStr, bool] = Field(default_factory=dict)


class LocusEntry(BaseModel):
    """A classified point or line as listed in reports."""

    kind: str
    locus: str
    planes: List[IntStr]


class Report(BaseModel):
    """Full analysis of one arrangement."""

    name: str
    equation: str
    scale: IntStr = 1
    admissibility: AdmissibilityVerdict
    counters: Optional[IncidenceCounters] = None
    loci: List[LocusEntry] = Field(default_factory=list)
    invariants: Optional[InvariantSet] = None
    hodge_diamond: Optional[List[List[IntStr]]] = None
    deformation: Optional[DeformationSummary] = None
    lseries: Optional[List[CountRecord]] = None
    modularity: Optional[ModularityResult] = None


class ExecutionLogEntry(BaseModel):
    """Record of a single pipeline stage."""

    stage: str
    status: StageStatus
    error: Optional[str] = None
    started_at: datetime = Field(default_factory=_utcnow)
    completed_at: Optional[datetime] = None


class Run(BaseModel):
    """Complete state of one analysis run."""

    run_id: str = Field(default_factory=lambda: str(uuid.uuid4()))
    arrangement: Dict[str, Any]
    primes: List[int] = Field(default_factory=list)
    status: RunStatus = RunStatus.PENDING
    report: Optional[Report] = None
    execution_log: List[ExecutionLogEntry] = Field(default_factory=list)
    created_at: datetime = Field(default_factory=_utcnow)
    completed_at: Optional[datetime] = None
    error: Optional[str] = None


class CreateRunRequest(BaseModel):
    """Request to analyze an arrangement: a catalog key or a full document."""

    catalog: Optional[str] = None
    document: Optional[Dict[str, Any]] = None
    params: Dict[str, str] = Field(default_factory=dict)
    scale: Optional[int] = None
    primes: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_source(self) -> "CreateRunRequest":
        if (self.catalog is None) == (self.document is None):
            raise ValueError("Give exactly one of 'catalog' or 'document'")
        return self


class CreateRunResponse(BaseModel):
    """Response after creating a run."""
    run_id: str
    status: RunStatus


class ToolResult(BaseModel):
    """Result from tool execution."""
    success: bool
    output: Any = None
    error: Optional[str] = None
    error_type: Optional[str] = None
