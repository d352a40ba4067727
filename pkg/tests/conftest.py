import pytest

from divdelta import graphs, kernels

MILLION = 1_000_000


@pytest.fixture(scope="session")
def member_flags_1m():
    """Membership flags for 0..10^6 via the difference/sum-set path."""
    return kernels.scan_member_flags(MILLION)


@pytest.fixture(scope="session")
def triples_1m():
    """Every (n, x, y, z) witness triple with n <= 10^6."""
    return kernels.scan_triples(MILLION)


@pytest.fixture(scope="session")
def corpus():
    """The fixed seeded corpus of 500 random split graphs."""
    return graphs.random_corpus()
