"""Tools running the analysis pipeline on one arrangement."""
from typing import Any, Dict, List, Optional

from src.arithmetic.counting import good_prime
from src.orchestrator.executor import Pipeline, PipelineResult, Stage
from src.tools.base import Tool

ARRANGEMENT_PROPERTIES: Dict[str, Dict[str, Any]] = {
    "catalog": {"type": "string", "description": "Catalog key such as '2', '84a' or 'f42'"},
    "file": {"type": "string", "description": "Path of an arrangement document"},
    "document": {"type": "object", "description": "Arrangement document"},
    "params": {"type": "object", "description": "Family parameters, e.g. {'A': '1', 'B': '3'}"},
    "scale": {"type": "integer", "description": "Squarefree scale of the equation"},
}


class PipelineTool(Tool):
    """A tool that resolves an arrangement and runs the pipeline on it."""

    stage: Stage = Stage.DEFORMATIONS
    uses_primes = False

    def __init__(self, pipeline: Optional[Pipeline] = None):
        self.pipeline = pipeline or Pipeline()

    @property
    def input_schema(self) -> Dict[str, Any]:
        properties = dict(ARRANGEMENT_PROPERTIES)
        if self.uses_primes:
            properties["primes"] = {"type": "array", "description": "Primes to count at"}
            properties["skip_bad_primes"] = {"type": "boolean", "description": "Drop bad primes"}
        return {"type": "object", "properties": properties}

    def primes(self, input_data: Dict[str, Any], arrangement) -> List[int]:
        if not self.uses_primes:
            return []
        primes = [int(p) for p in (input_data.get("primes") or self.pipeline.config.primes)]
        if input_data.get("skip_bad_primes"):
            primes = [p for p in primes if good_prime(arrangement, p).good]
        return primes

    def analyze(self, input_data: Dict[str, Any]) -> PipelineResult:
        arrangement = self.pipeline.resolve(input_data)
        primes = self.primes(input_data, arrangement)
        return self.pipeline.analyze(arrangement, primes, through=self.stage).raise_for_error()


class AnalyzeTool(PipelineTool):
    """Counters, invariants and the Hodge diamond; counts too when primes are given."""

    stage = Stage.MODULARITY

    @property
    def name(self) -> str:
        return "analyze"

    @property
    def description(self) -> str:
        return "Classify an arrangement and report its counters, loci, invariants and Hodge numbers."

    @property
    def input_schema(self) -> Dict[str, Any]:
        schema = super().input_schema
        schema["properties"]["primes"] = {"type": "array", "description": "Optional primes to count at"}
        return schema

    def primes(self, input_data: Dict[str, Any], arrangement) -> List[int]:
        return [int(p) for p in input_data.get("primes") or []]

    def run(self, input_data: Dict[str, Any]) -> Any:
        return self.analyze(input_data).report.model_dump(mode="json")


class HodgeTool(PipelineTool):
    """Equisingular deformation count with the dimensions behind it."""

    @property
    def name(self) -> str:
        return "hodge"

    @property
    def description(self) -> str:
        return "Compute h12 from the Jacobian and equisingular ideals in degree 8."

    def run(self, input_data: Dict[str, Any]) -> Any:
        return self.analyze(input_data).report.deformation.model_dump(mode="json")


class CountTool(PipelineTool):
    """Point counts over F_p with their correction breakdown."""

    stage = Stage.LSERIES
    uses_primes = True

    @property
    def name(self) -> str:
        return "count"

    @property
    def description(self) -> str:
        return "Count points of the resolved double octic over F_p and derive a_p."

    def run(self, input_data: Dict[str, Any]) -> Any:
        report = self.analyze(input_data).report
        return [record.model_dump(mode="json") for record in report.lseries or []]


class ModularTool(PipelineTool):
    """a_p vector matched against the newform table."""

    stage = Stage.MODULARITY
    uses_primes = True

    @property
    def name(self) -> str:
        return "modular"

    @property
    def description(self) -> str:
        return "Match the a_p vector of an arrangement against weight-4 newforms."

    def run(self, input_data: Dict[str, Any]) -> Any:
        report = self.analyze(input_data).report
        return report.modularity.model_dump(mode="json") if report.modularity else None
