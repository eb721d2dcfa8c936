"""In-memory storage for analysis runs."""
import threading
from typing import Dict, Optional

from src.models import Run


class RunStore:
    """Runs keyed by id; written from the worker pool, read by the API."""

    def __init__(self):
        self._runs: Dict[str, Run] = {}
        self._lock = threading.Lock()

    def save(self, run: Run) -> None:
        with self._lock:
            self._runs[run.run_id] = run

    def get(self, run_id: str) -> Optional[Run]:
        """
        Retrieve a run by ID.

        Returns:
            Run object if found, None otherwise
        """
        with self._lock:
            return self._runs.get(run_id)
