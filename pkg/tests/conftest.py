import pytest

from pogamma import fixture
from strategies import POOL


@pytest.fixture(params=["S1", "LZ2", "RZ2", "N2"])
def any_fixture(request):
    return fixture(request.param)


@pytest.fixture(scope="session")
def small_structures():
    """Every valid structure with |M| <= 3, |Gamma| = 1 and with |M| <= 2, |Gamma| <= 2."""
    return list(POOL)


@pytest.fixture(scope="session")
def tiny_structures(small_structures):
    return [S for S in small_structures if S.n <= 2]
