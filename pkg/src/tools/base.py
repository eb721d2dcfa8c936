"""Base tool interface and registry."""
from abc import ABC, abstractmethod
import logging
from typing import Any, Dict

from src.errors import OcticError
from src.models import ToolResult

logger = logging.getLogger(__name__)

# JSON schema type name -> accepted Python types
_SCHEMA_TYPES = {
    "string": (str,),
    "integer": (int,),
    "number": (int, float),
    "boolean": (bool,),
    "array": (list, tuple),
    "object": (dict,),
}


class Tool(ABC):
    """Abstract base class for all tools."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique tool identifier."""

    @property
    @abstractmethod
    def description(self) -> str:
        """Human-readable description of what the tool does."""

    @property
    @abstractmethod
    def input_schema(self) -> Dict[str, Any]:
        """JSON schema defining the expected input parameters."""

    @abstractmethod
    def run(self, input_data: Dict[str, Any]) -> Any:
        """Compute the tool's JSON-ready output; raises OcticError on failure."""

    def execute(self, input_data: Dict[str, Any]) -> ToolResult:
        """
        Execute the tool with given input.

        Args:
            input_data: Parameters for tool execution

        Returns:
            ToolResult with success status, output, and optional error
        """
        if not self.validate_input(input_data):
            return ToolResult(
                success=False,
                error=f"Invalid input for {self.name}: {sorted(input_data)}",
                error_type="ParseError",
            )
        try:
            return ToolResult(success=True, output=self.run(input_data))
        except OcticError as e:
            logger.debug("Tool %s failed: %s", self.name, e)
            return ToolResult(
                success=False,
                output=getattr(e, "details", None),
                error=str(e),
                error_type=type(e).__name__,
            )

    def validate_input(self, input_data: Dict[str, Any]) -> bool:
        """
        Validate input against the tool's schema.
        Basic validation - can be overridden for complex schemas.

        Args:
            input_data: Parameters to validate

        Returns:
            True if valid, False otherwise
        """
        schema = self.input_schema
        properties = schema.get("properties", {})

        for field in schema.get("required", []):
            if field not in input_data:
                return False

        for field, value in input_data.items():
            if field not in properties or value is None:
                continue
            expected = _SCHEMA_TYPES.get(properties[field].get("type"))
            if expected is None:
                continue
            if isinstance(value, bool) and bool not in expected:
                return False
            if not isinstance(value, expected):
                return False
            allowed = properties[field].get("enum")
            if allowed is not None and value not in allowed:
                return False

        return True


class ToolRegistry:
    """Registry for managing available tools."""

    def __init__(self):
        self._tools: Dict[str, Tool] = {}

    def register(self, tool: Tool) -> None:
        """Register a tool in the registry."""
        self._tools[tool.name] = tool

    def get(self, name: str) -> Tool:
        """Get a tool by name."""
        if name not in self._tools:
            raise ValueError(f"Tool '{name}' not found in registry")
        return self._tools[name]

    def exists(self, name: str) -> bool:
        """Check if a tool exists."""
        return name in self._tools

    def list_tools(self) -> Dict[str, Dict[str, Any]]:
        """List all available tools with their descriptions and schemas."""
        return {
            name: {
                "name": tool.name,
                "description": tool.description,
                "input_schema": tool.input_schema
            }
            for name, tool in self._tools.items()
        }
