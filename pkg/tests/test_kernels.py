"""Backend parity: the compiled and pure kernels must agree exactly."""

import pytest

from divdelta import graphs, kernels
from divdelta.graphs import _vertex_layout
from divdelta.kernels import _pure

try:
    from divdelta.kernels import _fast
except ImportError:
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled kernels not built")

SAMPLES = [2, 3, 4, 24, 40, 96, 105, 385, 624, 900, 1404, 5616, 7056, 2**31 + 11, 47**8 * 43]


def test_backend_reported():
    assert kernels.BACKEND in ("fast", "pure")


@needs_fast
def test_factor_parity():
    for n in SAMPLES + [1]:
        assert _pure.factor_pairs(n) == _fast.factor_pairs(n)


@needs_fast
def test_triples_parity():
    for n in SAMPLES:
        assert _pure.delta_triples(n) == _fast.delta_triples(n)


@needs_fast
def test_membership_parity():
    for n in SAMPLES:
        assert _pure.has_delta_sets(n) == _fast.has_delta_sets(n)


@needs_fast
def test_scan_parity():
    assert _pure.scan_member_flags(20_000) == _fast.scan_member_flags(20_000)
    assert _pure.scan_triples(20_000) == _fast.scan_triples(20_000)


@needs_fast
def test_sieve_parity():
    assert _pure.spf_sieve(5_000) == _fast.spf_sieve(5_000)


@needs_fast
def test_census_parity(corpus):
    for s in corpus[:40]:
        nv, ea, eb, adj = _vertex_layout(s)
        assert _pure.two_switch_census(nv, ea, eb, adj) == _fast.two_switch_census(nv, ea, eb, adj)


def test_census_matches_pairwise_formula(corpus):
    for s in corpus[:60]:
        total = sum(
            graphs.sigma(s, u, v)
            for i, u in enumerate(s.i_labels)
            for v in s.i_labels[i + 1 :]
        )
        assert graphs.two_switch_count(s) == total


def test_input_guards():
    for impl in filter(None, (_pure, _fast)):
        with pytest.raises(ValueError):
            impl.factor_pairs(0)
        with pytest.raises(ValueError):
            impl.has_delta_sets(1)
        with pytest.raises(ValueError):
            impl.factor_pairs(2**63)
        with pytest.raises(ValueError):
            impl.scan_member_flags(impl.SCAN_LIMIT_MAX + 1)
