"""FastAPI application entry point for the double octic analysis service."""
import asyncio
from concurrent.futures import ThreadPoolExecutor
import logging
from typing import Any, Dict, List

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
import uvicorn

from src import catalog
from src.errors import CatalogError, OcticError
from src.models import CreateRunRequest, CreateRunResponse, Run
from src.orchestrator.executor import Pipeline
from src.storage.run_store import RunStore
from src.tools import build_registry

logger = logging.getLogger(__name__)

# Initialize components
pipeline = Pipeline()
tool_registry = build_registry(pipeline)
run_store = RunStore()
executor_pool = ThreadPoolExecutor(max_workers=4)

# Create FastAPI app
app = FastAPI(
    title="Double Octic Arrangements",
    description="Invariants, point counts and modularity of double octic Calabi-Yau threefolds",
    version="1.0.0"
)


@app.get("/health")
async def health_check() -> Dict[str, Any]:
    """
    Health check endpoint.

    Returns:
        Status information
    """
    return {
        "status": "healthy",
        "service": "octic-arrangements",
        "available_tools": ", ".join(tool_registry.list_tools().keys())
    }


@app.get("/tools")
async def list_tools() -> Dict[str, Any]:
    """List all available tools and their schemas."""
    return tool_registry.list_tools()


@app.get("/catalog")
async def list_catalog() -> List[Dict[str, Any]]:
    """Catalog keys with their expected rows."""
    return catalog.listing()


@app.get("/catalog/{key}")
async def get_catalog_entry(key: str) -> Dict[str, Any]:
    """
    Arrangement document of a catalog entry.

    Raises:
        HTTPException: 404 if the key is unknown
    """
    try:
        return catalog.export(key)
    except CatalogError as e:
        raise HTTPException(status_code=404, detail=str(e))


@app.post("/runs", response_model=CreateRunResponse, status_code=201)
async def create_run(request: CreateRunRequest) -> CreateRunResponse:
    """
    Create and execute a new analysis run.

    Args:
        request: Catalog key or arrangement document, optional primes

    Returns:
        Run ID and initial status

    Raises:
        HTTPException: 400 if the arrangement cannot be built
    """
    source = request.model_dump(exclude={"primes"}, exclude_none=True)
    try:
        pipeline.resolve(source)
    except OcticError as e:
        raise HTTPException(status_code=400, detail=f"Failed to create run: {e}")

    run = Run(arrangement=source, primes=request.primes)
    run_store.save(run)
    response = CreateRunResponse(run_id=run.run_id, status=run.status)

    # Execute asynchronously (non-blocking)
    asyncio.create_task(execute_run_async(run.run_id))
    return response


async def execute_run_async(run_id: str) -> None:
    """
    Execute a run in the worker pool.

    Args:
        run_id: ID of the run to execute
    """
    run = run_store.get(run_id)
    if not run:
        return
    loop = asyncio.get_running_loop()
    updated = await loop.run_in_executor(executor_pool, pipeline.execute_run, run)
    run_store.save(updated)
    logger.info("Run %s finished with status %s", run_id, updated.status.value)


@app.get("/runs/{run_id}")
async def get_run(run_id: str) -> Run:
    """
    Get the complete state of a run.

    Raises:
        HTTPException: If run not found
    """
    run = run_store.get(run_id)
    if not run:
        raise HTTPException(
            status_code=404,
            detail=f"Run '{run_id}' not found"
        )
    return run


@app.exception_handler(OcticError)
async def octic_exception_handler(request, exc: OcticError):
    """Domain errors escaping an endpoint are client errors."""
    return JSONResponse(
        status_code=400,
        content={"detail": str(exc), "type": type(exc).__name__}
    )


@app.exception_handler(Exception)
async def global_exception_handler(request, exc: Exception):
    """Global exception handler for unhandled errors."""
    return JSONResponse(
        status_code=500,
        content={
            "detail": f"Internal server error: {str(exc)}",
            "type": type(exc).__name__
        }
    )


def main():
    """Run the FastAPI application."""
    logging.basicConfig(level=logging.INFO)
    logger.info("Available tools: %s", list(tool_registry.list_tools().keys()))
    uvicorn.run(
        app,
        host="0.0.0.0",
        port=8000,
        log_level="info"
    )


if __name__ == "__main__":
    main()
