import json

import pytest

from ellcover import FeynmanGraph, i_gamma_series


@pytest.fixture
def theta():
    return FeynmanGraph.from_edges(2, [[1, 2], [1, 2], [1, 2]])


@pytest.fixture
def dumbbell():
    return FeynmanGraph.from_edges(2, [[1, 1], [1, 2], [2, 2]])


@pytest.fixture
def caterpillar():
    """Genus-3 graph: a 4-cycle with two opposite edges doubled.  The edge
    order matters for branch types, so it is fixed here once."""
    return FeynmanGraph.from_edges(4, [[1, 3], [1, 2], [1, 2], [2, 4], [3, 4], [3, 4]])


@pytest.fixture
def k4():
    """The complete graph on 4 vertices, the other bridgeless genus-3 class."""
    return FeynmanGraph.from_edges(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])


# the two genus-3 graph series to O(q^18) are the most expensive inputs the
# suite needs; compute them once per session
@pytest.fixture(scope="session")
def caterpillar_series_16():
    graph = FeynmanGraph.from_edges(4, [[1, 3], [1, 2], [1, 2], [2, 4], [3, 4], [3, 4]])
    return i_gamma_series(graph, 8)


@pytest.fixture(scope="session")
def k4_series_16():
    graph = FeynmanGraph.from_edges(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])
    return i_gamma_series(graph, 8)


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph to a JSON file and return the path, for CLI tests."""

    def write(graph, name="graph.json"):
        path = tmp_path / name
        path.write_text(json.dumps(graph.to_json()))
        return str(path)

    return write
