import pytest

from fano2 import enumerate_candidates


@pytest.fixture(scope="session")
def candidates():
    """The full enumeration at the default cutoff, shared by the suite."""
    return enumerate_candidates()
