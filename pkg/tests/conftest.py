import pytest

from legch import corpus


@pytest.fixture(scope="session")
def unknot():
    return corpus.load("unknot")


@pytest.fixture(scope="session")
def trefoil():
    return corpus.load("trefoil")


@pytest.fixture(scope="session")
def trefoil_rii():
    return corpus.load("trefoil_rii")


@pytest.fixture(scope="session")
def island():
    return corpus.load("island")
