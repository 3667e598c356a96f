"""
Shared fixtures for the divmatch tests.
"""

import pytest
from hypothesis import HealthCheck, settings

from divmatch.config import get_default_config
from divmatch.graph.core import Graph
from divmatch.graph.generators import complete, complete_bipartite, cycle, path, petersen


settings.register_profile(
    "divmatch",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("divmatch")


@pytest.fixture
def config():
    return get_default_config()


@pytest.fixture
def k2():
    return path(2)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture
def edgeless():
    return Graph(2)
