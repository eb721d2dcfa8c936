"""Tools package - one tool per command."""
from typing import Optional

from src.orchestrator.executor import Pipeline
from src.tools.analysis import AnalyzeTool, CountTool, HodgeTool, ModularTool
from src.tools.base import Tool, ToolRegistry
from src.tools.catalog_tools import CatalogTool, Table1Tool


def build_registry(pipeline: Optional[Pipeline] = None) -> ToolRegistry:
    """Registry with every command tool sharing one pipeline."""
    pipeline = pipeline or Pipeline()
    registry = ToolRegistry()
    for tool in (AnalyzeTool(pipeline), HodgeTool(pipeline), CountTool(pipeline),
                 ModularTool(pipeline), CatalogTool(), Table1Tool(pipeline)):
        registry.register(tool)
    return registry


__all__ = [
    'AnalyzeTool',
    'CatalogTool',
    'CountTool',
    'HodgeTool',
    'ModularTool',
    'Table1Tool',
    'Tool',
    'ToolRegistry',
    'build_registry',
]
