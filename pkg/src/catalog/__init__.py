"""Catalog package - rigid arrangements and one-parameter families."""

from src.catalog.entries import FAMILIES, GENERIC_ROW, RIGID, CatalogEntry, Table1Row
from src.catalog.registry import default_params, entry, export, get, keys, listing

__all__ = [
    'CatalogEntry',
    'FAMILIES',
    'GENERIC_ROW',
    'RIGID',
    'Table1Row',
    'default_params',
    'entry',
    'export',
    'get',
    'keys',
    'listing',
]
