import pytest

from codedim.linalg import warm_up


@pytest.fixture(scope="session", autouse=True)
def _warm_rank_kernel():
    """JIT-compile the rank kernel up front so timed tests stay honest."""
    warm_up()
