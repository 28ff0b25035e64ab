from __future__ import annotations

import pytest

from hyperexpand.graphs import (
    complete_bipartite_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)


@pytest.fixture
def k33():
    return complete_bipartite_graph(3)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def c8():
    return cycle_graph(8)


@pytest.fixture
def path7():
    return path_graph(7)


@pytest.fixture
def petersen():
    return petersen_graph()
