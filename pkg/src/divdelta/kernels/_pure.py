"""Pure-Python kernels.

Same contract as the compiled module ``divdelta.kernels._fast``; the
package picks whichever is importable (see ``divdelta.kernels``).  The two
implementations must stay behaviourally identical -- the test suite runs
them side by side on shared inputs.
"""

from math import isqrt

CEILING = (1 << 63) - 1
SCAN_LIMIT_MAX = 50_000_000
SPF_LIMIT_MAX = 10_000_000

BACKEND_NAME = "pure"


def _check_int(n, lo, name="n"):
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    if n < lo:
        raise ValueError(f"{name} must be >= {lo}, got {n}")
    if n > CEILING:
        raise ValueError(f"{name} exceeds the 2**63 - 1 ceiling")


def factor_pairs(n):
    """Prime factorization of n >= 1 as [(prime, exponent), ...], primes ascending."""
    _check_int(n, 1)
    fac = []
    if n % 2 == 0:
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        fac.append((2, e))
    d = 3
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            fac.append((d, e))
        d += 2
    if n > 1:
        fac.append((n, 1))
    return fac


def _divisors(fac):
    divs = [1]
    for p, e in fac:
        base = len(divs)
        pk = 1
        for _ in range(e):
            pk *= p
            divs.extend(divs[i] * pk for i in range(base))
    divs.sort()
    return divs


def delta_triples(n):
    """All (x, y, z) with 1 < x < y <= z, all divisors of n below sqrt(n), and
    n/x - x = (n/y - y) + (n/z - z).  Lexicographically ordered.

    The complementary difference n/d - d is injective over divisors below
    sqrt(n) (a collision d1 < d2 would force n = d1*d2, putting d2 above the
    root), so z is recovered by exact lookup instead of a third loop.
    """
    _check_int(n, 2)
    divs = [d for d in _divisors(factor_pairs(n)) if d * d < n]
    m = len(divs)
    diffs = [n // d - d for d in divs]
    where = {v: i for i, v in enumerate(diffs)}
    out = []
    for i in range(1, m):
        ci = diffs[i]
        for j in range(i + 1, m):
            k = where.get(ci - diffs[j])
            if k is not None and k >= j:
                out.append((divs[i], divs[j], divs[k]))
    return out


def has_delta_sets(n):
    """Definition path: some difference of complementary divisors of n equals
    the sum of two (not necessarily distinct) nonzero such differences."""
    _check_int(n, 2)
    star = [n // d - d for d in _divisors(factor_pairs(n)) if d * d <= n]
    targets = set(star)
    nz = [v for v in star if v]
    k = len(nz)
    for i in range(k):
        a = nz[i]
        for j in range(i, k):
            if a + nz[j] in targets:
                return True
    return False


def spf_sieve(limit):
    """Smallest-prime-factor table: spf[n] = least prime dividing n, spf[0] = spf[1] = 0."""
    _check_int(limit, 2, "limit")
    if limit > SPF_LIMIT_MAX:
        raise ValueError(f"limit exceeds the sieve cap {SPF_LIMIT_MAX}")
    spf = list(range(limit + 1))
    spf[0] = 0
    spf[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def _factor_from_spf(n, spf):
    fac = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        fac.append((p, e))
    return fac


def _check_scan(limit):
    _check_int(limit, 2, "limit")
    if limit > SCAN_LIMIT_MAX:
        raise ValueError(f"limit exceeds the scan cap {SCAN_LIMIT_MAX}")


def scan_member_flags(limit):
    """Membership flags for 0..limit via the difference/sum-set definition.

    Returns bytes b with b[n] == 1 exactly when n has the property.
    """
    _check_scan(limit)
    spf = spf_sieve(limit) if limit <= SPF_LIMIT_MAX else None
    flags = bytearray(limit + 1)
    for n in range(2, limit + 1):
        fac = _factor_from_spf(n, spf) if spf else factor_pairs(n)
        star = [n // d - d for d in _divisors(fac) if d * d <= n]
        targets = set(star)
        nz = [v for v in star if v]
        hit = 0
        k = len(nz)
        for i in range(k):
            a = nz[i]
            for j in range(i, k):
                if a + nz[j] in targets:
                    hit = 1
                    break
            if hit:
                break
        flags[n] = hit
    return bytes(flags)


def scan_triples(limit):
    """All (n, x, y, z) for 2 <= n <= limit, ordered by n then lexicographically."""
    _check_scan(limit)
    spf = spf_sieve(limit) if limit <= SPF_LIMIT_MAX else None
    out = []
    for n in range(2, limit + 1):
        fac = _factor_from_spf(n, spf) if spf else factor_pairs(n)
        divs = [d for d in _divisors(fac) if d * d < n]
        m = len(divs)
        if m < 3:
            continue
        diffs = [n // d - d for d in divs]
        where = {v: i for i, v in enumerate(diffs)}
        for i in range(1, m):
            ci = diffs[i]
            for j in range(i + 1, m):
                k = where.get(ci - diffs[j])
                if k is not None and k >= j:
                    out.append((n, divs[i], divs[j], divs[k]))
    return out


def two_switch_census(nv, edges_a, edges_b, adj):
    """Count distinct 2-switches by brute enumeration over pairs of disjoint
    edges, trying both endpoint matchings.

    A switch is identified by its unordered removed-edge pair plus the
    matching, which determines the added pair; no two enumerated candidates
    share an identity, so plain counting is exact.  Returns (count,
    participant_flags) with one flag byte per vertex index.
    """
    m = len(edges_a)
    if len(edges_b) != m:
        raise ValueError("edge endpoint arrays differ in length")
    if len(adj) != nv * nv:
        raise ValueError("adjacency buffer has wrong size")
    part = bytearray(nv)
    count = 0
    for i in range(m):
        a = edges_a[i]
        b = edges_b[i]
        for j in range(i + 1, m):
            x = edges_a[j]
            y = edges_b[j]
            if x == a or x == b or y == a or y == b:
                continue
            if not adj[a * nv + x] and not adj[b * nv + y]:
                count += 1
                part[a] = part[b] = part[x] = part[y] = 1
            if not adj[a * nv + y] and not adj[b * nv + x]:
                count += 1
                part[a] = part[b] = part[x] = part[y] = 1
    return count, bytes(part)
