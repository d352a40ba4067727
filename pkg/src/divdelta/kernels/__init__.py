"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is the fallback
when the extension was not built.  Both expose the same functions with the
same semantics; ``BACKEND`` names whichever one is live.
"""

try:
    from divdelta.kernels import _fast as _impl

    BACKEND = "fast"
except ImportError:  # extension not built
    from divdelta.kernels import _pure as _impl

    BACKEND = "pure"

CEILING = _impl.CEILING
SCAN_LIMIT_MAX = _impl.SCAN_LIMIT_MAX
SPF_LIMIT_MAX = _impl.SPF_LIMIT_MAX

factor_pairs = _impl.factor_pairs
delta_triples = _impl.delta_triples
has_delta_sets = _impl.has_delta_sets
spf_sieve = _impl.spf_sieve
scan_member_flags = _impl.scan_member_flags
scan_triples = _impl.scan_triples
two_switch_census = _impl.two_switch_census

__all__ = [
    "BACKEND",
    "CEILING",
    "SCAN_LIMIT_MAX",
    "SPF_LIMIT_MAX",
    "factor_pairs",
    "delta_triples",
    "has_delta_sets",
    "spf_sieve",
    "scan_member_flags",
    "scan_triples",
    "two_switch_census",
]
