# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for the hot paths: factorization, range scans for
membership and divisor triples, and the 2-switch census.

Must stay behaviourally identical to ``divdelta.kernels._pure``; the test
suite runs the two backends side by side.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc, qsort

ctypedef unsigned long long u64

CEILING = (1 << 63) - 1
SCAN_LIMIT_MAX = 50_000_000
SPF_LIMIT_MAX = 10_000_000

BACKEND_NAME = "fast"

# 2*3*...*53 already exceeds 2**64, so 15 distinct primes suffice below the ceiling.
cdef enum:
    MAX_PRIMES = 16


cdef int _cmp_u64(const void* pa, const void* pb) noexcept nogil:
    cdef u64 a = (<const u64*> pa)[0]
    cdef u64 b = (<const u64*> pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


cdef u64 _isqrt(u64 n) noexcept nogil:
    cdef u64 s = <u64> sqrt(<double> n)
    if s > 2:
        s -= 2
    while (s + 1) * (s + 1) <= n:
        s += 1
    while s * s > n:
        s -= 1
    return s


cdef int _factor_u64(u64 n, u64* ps, long long* es) noexcept nogil:
    cdef int cnt = 0
    cdef long long e
    cdef u64 d
    if n % 2 == 0:
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        ps[cnt] = 2
        es[cnt] = e
        cnt += 1
    d = 3
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            ps[cnt] = d
            es[cnt] = e
            cnt += 1
        d += 2
    if n > 1:
        ps[cnt] = n
        es[cnt] = 1
        cnt += 1
    return cnt


cdef u64 _tau_of(long long* es, int k) noexcept nogil:
    cdef u64 t = 1
    cdef int i
    for i in range(k):
        t *= <u64> (es[i] + 1)
    return t


cdef u64 _gen_divisors(u64* ps, long long* es, int k, u64* buf) noexcept nogil:
    cdef u64 cnt = 1
    cdef u64 base, pk, i
    cdef int t
    cdef long long e
    buf[0] = 1
    for t in range(k):
        base = cnt
        pk = 1
        for e in range(es[t]):
            pk *= ps[t]
            for i in range(base):
                buf[cnt] = buf[i] * pk
                cnt += 1
    return cnt


cdef void _insertion_sort(u64* arr, u64 m) noexcept nogil:
    cdef u64 i, j, v
    for i in range(1, m):
        v = arr[i]
        j = i
        while j > 0 and arr[j - 1] > v:
            arr[j] = arr[j - 1]
            j -= 1
        arr[j] = v


cdef long long _find_desc(u64* arr, u64 lo, u64 hi, u64 val) noexcept nogil:
    # arr strictly decreasing on [lo, hi); index of val or -1
    cdef u64 a = lo
    cdef u64 b = hi
    cdef u64 mid
    while a < b:
        mid = (a + b) // 2
        if arr[mid] == val:
            return <long long> mid
        if arr[mid] > val:
            a = mid + 1
        else:
            b = mid
    return -1


cdef bint _find_asc(u64* arr, u64 m, u64 val) noexcept nogil:
    cdef u64 a = 0
    cdef u64 b = m
    cdef u64 mid
    while a < b:
        mid = (a + b) // 2
        if arr[mid] == val:
            return 1
        if arr[mid] < val:
            a = mid + 1
        else:
            b = mid
    return 0


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
    cdef u64 nn = n
    cdef u64 ps[MAX_PRIMES]
    cdef long long es[MAX_PRIMES]
    cdef int k = _factor_u64(nn, ps, es)
    return [(ps[i], es[i]) for i in range(k)]


def delta_triples(n):
    """All (x, y, z) with 1 < x < y <= z, all divisors of n below sqrt(n), and
    n/x - x = (n/y - y) + (n/z - z).  Lexicographically ordered.

    z is recovered by binary search over the complementary differences, which
    are strictly decreasing (and hence unique) over divisors below the root.
    """
    _check_int(n, 2)
    cdef u64 nn = n
    cdef u64 ps[MAX_PRIMES]
    cdef long long es[MAX_PRIMES]
    cdef int k = _factor_u64(nn, ps, es)
    cdef u64 tau = _tau_of(es, k)
    cdef u64* buf = <u64*> malloc(2 * tau * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef u64 total = _gen_divisors(ps, es, k, buf)
    qsort(buf, total, sizeof(u64), _cmp_u64)
    cdef u64 s = _isqrt(nn)
    cdef u64 dmax = s if s * s < nn else s - 1
    cdef u64 m = 0
    cdef u64 i, j
    for i in range(total):
        if buf[i] <= dmax:
            buf[m] = buf[i]
            m += 1
        else:
            break
    cdef u64* diff = buf + tau
    for i in range(m):
        diff[i] = nn // buf[i] - buf[i]
    out = []
    cdef u64 ci
    cdef long long kk
    for i in range(1, m):
        ci = diff[i]
        for j in range(i + 1, m):
            if diff[j] > ci:
                continue
            kk = _find_desc(diff, j, m, ci - diff[j])
            if kk >= 0:
                out.append((buf[i], buf[j], buf[kk]))
    free(buf)
    return out


def has_delta_sets(n):
    """Definition path: some difference of complementary divisors of n equals
    the sum of two (not necessarily distinct) nonzero such differences."""
    _check_int(n, 2)
    cdef u64 nn = n
    cdef u64 ps[MAX_PRIMES]
    cdef long long es[MAX_PRIMES]
    cdef int k = _factor_u64(nn, ps, es)
    cdef u64 tau = _tau_of(es, k)
    cdef u64* buf = <u64*> malloc(2 * tau * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef u64 total = _gen_divisors(ps, es, k, buf)
    cdef u64 s = _isqrt(nn)
    cdef u64* star = buf + tau
    cdef u64 m = 0
    cdef u64 i, j
    for i in range(total):
        if buf[i] <= s:
            star[m] = nn // buf[i] - buf[i]
            m += 1
    _insertion_sort(star, m)
    # a zero entry (perfect square) sorts first; sums must skip it
    cdef u64 lo = 0
    while lo < m and star[lo] == 0:
        lo += 1
    cdef bint hit = 0
    for i in range(lo, m):
        for j in range(i, m):
            if _find_asc(star, m, star[i] + star[j]):
                hit = 1
                break
        if hit:
            break
    free(buf)
    return bool(hit)


cdef int* _build_spf(long long limit) except NULL:
    cdef int* spf = <int*> malloc((limit + 1) * sizeof(int))
    if spf == NULL:
        raise MemoryError()
    cdef long long i, p, q
    with nogil:
        for i in range(limit + 1):
            spf[i] = <int> i
        spf[0] = 0
        if limit >= 1:
            spf[1] = 0
        p = 2
        while p * p <= limit:
            if spf[p] == p:
                q = p * p
                while q <= limit:
                    if spf[q] == q:
                        spf[q] = <int> p
                    q += p
            p += 1
    return spf


def spf_sieve(limit):
    """Smallest-prime-factor table: spf[n] = least prime dividing n, spf[0] = spf[1] = 0."""
    _check_int(limit, 2, "limit")
    if limit > SPF_LIMIT_MAX:
        raise ValueError(f"limit exceeds the sieve cap {SPF_LIMIT_MAX}")
    cdef long long L = limit
    cdef int* spf = _build_spf(L)
    try:
        return [spf[i] for i in range(L + 1)]
    finally:
        free(spf)


cdef int _factor_spf(long long n, int* spf, u64* ps, long long* es) noexcept nogil:
    cdef int cnt = 0
    cdef long long p, e
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        ps[cnt] = <u64> p
        es[cnt] = e
        cnt += 1
    return cnt


def _check_scan(limit):
    _check_int(limit, 2, "limit")
    if limit > SCAN_LIMIT_MAX:
        raise ValueError(f"limit exceeds the scan cap {SCAN_LIMIT_MAX}")


def scan_member_flags(limit):
    """Membership flags for 0..limit via the difference/sum-set definition.

    Returns bytes b with b[n] == 1 exactly when n has the property.
    """
    _check_scan(limit)
    cdef long long L = limit
    cdef int* spf = _build_spf(L)
    out = bytearray(L + 1)
    cdef unsigned char[:] ov = out
    cdef u64 ps[MAX_PRIMES]
    cdef long long es[MAX_PRIMES]
    cdef u64* buf = <u64*> malloc(4096 * sizeof(u64))
    cdef u64* star = <u64*> malloc(4096 * sizeof(u64))
    if buf == NULL or star == NULL:
        free(spf)
        if buf != NULL:
            free(buf)
        if star != NULL:
            free(star)
        raise MemoryError()
    cdef long long n
    cdef int k
    cdef u64 total, s, m, i, j, lo
    cdef bint hit
    with nogil:
        for n in range(2, L + 1):
            k = _factor_spf(n, spf, ps, es)
            total = _gen_divisors(ps, es, k, buf)
            s = _isqrt(<u64> n)
            m = 0
            for i in range(total):
                if buf[i] <= s:
                    star[m] = (<u64> n) // buf[i] - buf[i]
                    m += 1
            _insertion_sort(star, m)
            lo = 0
            while lo < m and star[lo] == 0:
                lo += 1
            hit = 0
            for i in range(lo, m):
                for j in range(i, m):
                    if _find_asc(star, m, star[i] + star[j]):
                        hit = 1
                        break
                if hit:
                    break
            ov[n] = hit
    free(spf)
    free(buf)
    free(star)
    return bytes(out)


def scan_triples(limit):
    """All (n, x, y, z) for 2 <= n <= limit, ordered by n then lexicographically."""
    _check_scan(limit)
    cdef long long L = limit
    cdef int* spf = _build_spf(L)
    cdef u64 ps[MAX_PRIMES]
    cdef long long es[MAX_PRIMES]
    cdef u64* buf = <u64*> malloc(4096 * sizeof(u64))
    cdef u64* diff = <u64*> malloc(4096 * sizeof(u64))
    if buf == NULL or diff == NULL:
        free(spf)
        if buf != NULL:
            free(buf)
        if diff != NULL:
            free(diff)
        raise MemoryError()
    out = []
    cdef long long n
    cdef int k
    cdef u64 total, s, dmax, m, i, j, ci
    cdef long long kk
    for n in range(2, L + 1):
        k = _factor_spf(n, spf, ps, es)
        total = _gen_divisors(ps, es, k, buf)
        _insertion_sort(buf, total)
        s = _isqrt(<u64> n)
        dmax = s if s * s < <u64> n else s - 1
        m = 0
        for i in range(total):
            if buf[i] <= dmax:
                m += 1
            else:
                break
        if m < 3:
            continue
        for i in range(m):
            diff[i] = (<u64> n) // buf[i] - buf[i]
        for i in range(1, m):
            ci = diff[i]
            for j in range(i + 1, m):
                if diff[j] > ci:
                    continue
                kk = _find_desc(diff, j, m, ci - diff[j])
                if kk >= 0:
                    out.append((n, buf[i], buf[j], buf[kk]))
    free(spf)
    free(buf)
    free(diff)
    return out


def two_switch_census(int nv, edges_a, edges_b, adj):
    """Count distinct 2-switches by brute enumeration over pairs of disjoint
    edges, trying both endpoint matchings.

    Returns (count, participant_flags), one flag byte per vertex index.
    """
    cdef const int[:] ea = edges_a
    cdef const int[:] eb = edges_b
    cdef const unsigned char[:] av = adj
    cdef Py_ssize_t m = ea.shape[0]
    if eb.shape[0] != m:
        raise ValueError("edge endpoint arrays differ in length")
    if av.shape[0] != <Py_ssize_t> nv * nv:
        raise ValueError("adjacency buffer has wrong size")
    part = bytearray(nv)
    cdef unsigned char[:] pv = part
    cdef long long count = 0
    cdef Py_ssize_t i, j
    cdef Py_ssize_t a, b, x, y
    with nogil:
        for i in range(m):
            a = ea[i]
            b = eb[i]
            for j in range(i + 1, m):
                x = ea[j]
                y = eb[j]
                if x == a or x == b or y == a or y == b:
                    continue
                if av[a * nv + x] == 0 and av[b * nv + y] == 0:
                    count += 1
                    pv[a] = 1
                    pv[b] = 1
                    pv[x] = 1
                    pv[y] = 1
                if av[a * nv + y] == 0 and av[b * nv + x] == 0:
                    count += 1
                    pv[a] = 1
                    pv[b] = 1
                    pv[x] = 1
                    pv[y] = 1
    return count, bytes(part)
