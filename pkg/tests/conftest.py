import pytest

from distlap import enumerate_connected


@pytest.fixture(scope="session")
def corpus():
    """Connected graphs by order, 1..6; order 7 is exercised where a test
    really needs it to keep the default run quick."""
    return {n: list(enumerate_connected(n)) for n in range(1, 7)}
