"""Integration tests for the complete system."""
import asyncio

import pytest
from httpx import AsyncClient, ASGITransport

from src.main import app
from src.models import RunStatus, StageStatus


@pytest.mark.asyncio
class TestAPIIntegration:
    """Test complete API workflows."""

    async def test_health_check(self):
        """Test the health check endpoint."""
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.get("/health")

            assert response.status_code == 200
            data = response.json()
            assert data["status"] == "healthy"
            assert "analyze" in data["available_tools"]

    async def test_list_tools(self):
        """Test the tools listing endpoint."""
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.get("/tools")

            assert response.status_code == 200
            tools = response.json()
            assert set(tools) == {"analyze", "hodge", "count", "modular", "catalog", "table1"}
            assert "description" in tools["count"]
            assert "primes" in tools["count"]["input_schema"]["properties"]

    async def test_catalog_listing(self):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.get("/catalog")

            assert response.status_code == 200
            assert len(response.json()) == 22

    async def test_catalog_entry(self):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.get("/catalog/85")

            assert response.status_code == 200
            document = response.json()
            assert document["name"] == "85"
            assert len(document["planes"]) == 8

    async def test_unknown_catalog_entry_returns_404(self):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.get("/catalog/99")

            assert response.status_code == 404

    async def test_create_run_returns_201(self):
        """Test that creating a run returns 201."""
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.post("/runs", json={"catalog": "2"})

            assert response.status_code == 201
            data = response.json()
            assert "run_id" in data
            assert data["status"] == "pending"

    async def test_get_nonexistent_run_returns_404(self):
        """Test that getting a nonexistent run returns 404."""
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.get("/runs/nonexistent-id")

            assert response.status_code == 404
            assert "detail" in response.json()

    async def test_unknown_catalog_key_returns_400(self):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.post("/runs", json={"catalog": "99"})

            assert response.status_code == 400

    async def test_malformed_document_returns_400(self):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.post("/runs", json={"document": {"name": "short", "planes": [[1, 0, 0, 0]]}})

            assert response.status_code == 400

    async def test_create_run_invalid_json_returns_422(self):
        """Test that a request without a source returns 422."""
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.post("/runs", json={"wrong_field": "value"})

            assert response.status_code == 422

    async def test_two_sources_return_422(self, pencil_document):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            response = await client.post("/runs", json={"catalog": "2", "document": pencil_document})

            assert response.status_code == 422


@pytest.mark.asyncio
@pytest.mark.slow
class TestEndToEndWorkflow:
    """Runs executed in the background worker pool."""

    @staticmethod
    async def _wait(client, run_id, timeout=120.0):
        waited = 0.0
        while waited < timeout:
            response = await client.get(f"/runs/{run_id}")
            run_data = response.json()
            if run_data["status"] in (RunStatus.COMPLETED, RunStatus.FAILED):
                return run_data
            await asyncio.sleep(0.5)
            waited += 0.5
        pytest.fail(f"Run {run_id} did not finish within {timeout}s")

    async def test_catalog_run_with_primes(self):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            create_response = await client.post("/runs", json={"catalog": "2", "primes": [5, 7]})
            assert create_response.status_code == 201

            run_data = await self._wait(client, create_response.json()["run_id"])

            assert run_data["status"] == RunStatus.COMPLETED
            assert [entry["status"] for entry in run_data["execution_log"]] == ["completed"] * 5
            report = run_data["report"]
            assert report["invariants"]["h11"] == "70"
            assert [record["a_p"] for record in report["lseries"]] == ["-2", "24"]
            assert report["modularity"]["matched_label"] == "8k4A"

    async def test_inadmissible_document_fails(self, pencil_document):
        async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
            create_response = await client.post("/runs", json={"document": pencil_document})
            assert create_response.status_code == 201

            run_data = await self._wait(client, create_response.json()["run_id"])

            assert run_data["status"] == RunStatus.FAILED
            assert run_data["error"].startswith("AdmissibilityError")
            assert len(run_data["execution_log"]) == 1


# Synchronous pipeline tests without the web layer
def test_full_pipeline_without_api():
    """Test a run through every stage of the pipeline."""
    from src.orchestrator.executor import Pipeline
    from src.models import Run

    run = Run(arrangement={"catalog": "2"}, primes=[5, 7])
    updated_run = Pipeline().execute_run(run)

    assert updated_run.status == RunStatus.COMPLETED
    assert [entry.stage for entry in updated_run.execution_log] == [
        "classify", "invariants", "deformations", "lseries", "modularity"
    ]
    assert all(entry.status == StageStatus.COMPLETED for entry in updated_run.execution_log)
    assert updated_run.report.modularity.matched_label == "8k4A"
    assert updated_run.completed_at is not None


def test_arithmetic_stages_skipped_without_primes():
    from src import catalog
    from src.orchestrator.executor import Pipeline

    result = Pipeline().analyze(catalog.get("2"))

    assert result.error is None
    assert [entry.status for entry in result.log][-2:] == [StageStatus.SKIPPED, StageStatus.SKIPPED]
    assert result.report.lseries is None
    assert result.report.invariants.h11 == 70


def test_pipeline_stops_at_requested_stage():
    from src import catalog
    from src.orchestrator.executor import Pipeline, Stage

    result = Pipeline().analyze(catalog.get("85"), through=Stage.CLASSIFY)

    assert len(result.log) == 1
    assert result.report.counters.p4_0 == 12
    assert result.report.invariants is None
    assert sum(1 for locus in result.report.loci if locus.kind == "p4^0") == 12


def test_failed_stage_stops_execution(pencil_document):
    """Test that an inadmissible arrangement stops after classification."""
    from src.arrangement import parse
    from src.errors import AdmissibilityError
    from src.orchestrator.executor import Pipeline

    result = Pipeline().analyze(parse(pencil_document), primes=[5])

    assert len(result.log) == 1
    assert result.log[0].status == StageStatus.FAILED
    assert isinstance(result.error, AdmissibilityError)
    assert result.report.admissibility.locus == "x=y=0"
    with pytest.raises(AdmissibilityError):
        result.raise_for_error()


def test_unresolvable_run_fails():
    from src.orchestrator.executor import Pipeline
    from src.models import Run

    updated_run = Pipeline().execute_run(Run(arrangement={"catalog": "99"}))

    assert updated_run.status == RunStatus.FAILED
    assert updated_run.error.startswith("CatalogError")
    assert updated_run.execution_log == []


def test_unexpected_stage_error_is_wrapped(monkeypatch):
    from src import catalog
    from src.errors import OcticError, StageError
    from src.orchestrator.executor import Pipeline

    def crash(self, context, report):
        raise RuntimeError("boom")

    monkeypatch.setattr(Pipeline, "_invariants", crash)
    result = Pipeline().analyze(catalog.get("2"))

    assert isinstance(result.error, StageError)
    assert isinstance(result.error, OcticError)
    assert result.error.stage == "invariants"
    assert result.log[-1].status == StageStatus.FAILED
    assert result.log[-1].error == "RuntimeError: boom"
    with pytest.raises(OcticError, match="boom"):
        result.raise_for_error()
