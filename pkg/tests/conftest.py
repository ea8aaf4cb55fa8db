import pytest

from fivecolor import instances


@pytest.fixture(scope="session")
def icosahedron():
    return instances.named("icosahedron")


@pytest.fixture(scope="session")
def octahedron():
    return instances.named("octahedron")


@pytest.fixture(scope="session")
def cube():
    return instances.named("cube")


@pytest.fixture(scope="session")
def k4():
    return instances.named("k4")
