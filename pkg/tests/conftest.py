import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coremine.graph import build_graph, build_partite_graph  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def complete(labels):
    return list(itertools.combinations(labels, 2))


@pytest.fixture
def triangle():
    return build_graph([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def path4():
    return build_graph([("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture
def star5():
    return build_graph([("c", f"l{i}") for i in range(1, 6)])


@pytest.fixture
def k4():
    return build_graph(complete("abcd"))


@pytest.fixture
def k4_pendant():
    return build_graph(complete("abcd") + [("d", "p")])


@pytest.fixture
def k23():
    edges = [(a, x) for a in "ab" for x in "xyz"]
    part = {"a": 1, "b": 1, "x": 2, "y": 2, "z": 2}
    return build_partite_graph(edges, part, 2)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
