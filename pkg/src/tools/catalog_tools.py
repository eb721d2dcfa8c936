"""Tools over the built-in catalog."""
import logging
from typing import Any, Dict, Optional

from src import catalog
from src.errors import OcticError, ParseError, TableMismatchError
from src.orchestrator.executor import Pipeline, Stage
from src.tools.base import Tool

logger = logging.getLogger(__name__)


class CatalogTool(Tool):
    """Lists catalog entries or exports one as a document."""

    @property
    def name(self) -> str:
        return "catalog"

    @property
    def description(self) -> str:
        return "List catalog keys with expected rows, or export an entry as an arrangement document."

    @property
    def input_schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "operation": {"type": "string", "enum": ["list", "export"]},
                "key": {"type": "string", "description": "Entry to export"},
                "params": {"type": "object", "description": "Family parameters"},
            },
            "required": ["operation"],
        }

    def run(self, input_data: Dict[str, Any]) -> Any:
        if input_data["operation"] == "list":
            return catalog.listing()
        if not input_data.get("key"):
            raise ParseError("catalog export needs a key")
        return catalog.export(input_data["key"], input_data.get("params") or None)


class Table1Tool(Tool):
    """Recomputes every catalog entry and compares it with its expected row."""

    def __init__(self, pipeline: Optional[Pipeline] = None):
        self.pipeline = pipeline or Pipeline()

    @property
    def name(self) -> str:
        return "table1"

    @property
    def description(self) -> str:
        return "Recompute counters, h12, h11 and e for all catalog entries and diff them against the table."

    @property
    def input_schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "keys": {"type": "array", "description": "Subset of catalog keys, all by default"},
            },
        }

    def _row(self, key: str) -> Dict[str, Any]:
        item = catalog.entry(key)
        expected = list(item.expected.as_tuple())
        try:
            result = self.pipeline.analyze(catalog.get(key), through=Stage.DEFORMATIONS)
            result.raise_for_error()
        except OcticError as e:
            return {"key": key, "row": item.expected.row, "expected": expected,
                    "computed": None, "match": False, "error": str(e)}
        inv = result.report.invariants
        computed = list(inv.counters.as_tuple()) + [inv.h12, inv.h11, inv.e]
        return {"key": key, "row": item.expected.row, "expected": expected,
                "computed": computed, "match": computed == expected, "error": None}

    def run(self, input_data: Dict[str, Any]) -> Any:
        keys = input_data.get("keys") or catalog.keys()
        rows = []
        for key in keys:
            row = self._row(str(key))
            logger.info("Table row %s (%s): %s", row["row"], key, "ok" if row["match"] else "MISMATCH")
            rows.append({**row, "expected": [str(v) for v in row["expected"]],
                         "computed": None if row["computed"] is None else [str(v) for v in row["computed"]]})
        mismatches = [row["key"] for row in rows if not row["match"]]
        output = {"rows": rows, "mismatches": mismatches}
        if mismatches:
            raise TableMismatchError(f"Rows differ for {', '.join(mismatches)}", details=output)
        return output
