"""Storage package - Contains storage implementations."""

from src.storage.run_store import RunStore

__all__ = ['RunStore']