from __future__ import annotations

import pytest

from polyconn import Graph


@pytest.fixture
def fix_k3() -> Graph:
    """Triangle on u, v, w."""
    return Graph.from_edges([("e1", "u", "v"), ("e2", "v", "w"), ("e3", "u", "w")])


@pytest.fixture
def path_graph() -> Graph:
    return Graph.from_edges([("e1", "u", "v"), ("e2", "v", "w")])


@pytest.fixture
def loop_graph() -> Graph:
    return Graph.from_edges([("e", "v", "v")])
