import pytest

from multiell import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    """Default working precision used across the suite."""
    return PrecisionContext(50)


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)
