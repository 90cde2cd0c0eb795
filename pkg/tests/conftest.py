import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from knesergeom import (
    KneserParams,
    bipartite_double_cover,
    kneser_graph,
)


@pytest.fixture(scope="session")
def petersen():
    return kneser_graph(KneserParams(5, 2))


@pytest.fixture(scope="session")
def desargues(petersen):
    return bipartite_double_cover(petersen)
