"""Shared fixtures: small documents and classified catalog arrangements."""
import pytest

from src import catalog
from src.arrangement.incidence import classify

# four planes through the line x = y = 0
PENCIL_DOCUMENT = {
    "name": "pencil",
    "planes": [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [1, -1, 0, 0],
               [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1], [1, 2, 3, 5]],
}

# six planes through (0:0:0:1)
SIX_FOLD_DOCUMENT = {
    "name": "six-fold",
    "planes": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0],
               [1, 0, 1, 0], [0, 1, 1, 0], [1, 2, 3, 5], [3, -1, 2, 7]],
}


@pytest.fixture
def arrangement_2():
    return catalog.get("2")


@pytest.fixture
def incidence_2(arrangement_2):
    return classify(arrangement_2)


@pytest.fixture
def arrangement_85():
    return catalog.get("85")


@pytest.fixture
def pencil_document():
    return dict(PENCIL_DOCUMENT)


@pytest.fixture
def six_fold_document():
    return dict(SIX_FOLD_DOCUMENT)
