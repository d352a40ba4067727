"""Self-verification suites.

Each suite re-derives a slice of the library's claims from scratch --
brute-force oracles against closed forms, formula against enumeration --
and reports how many checks ran and which failed.  The CLI exposes them via
``verify --suite ...``; the acceptance tests reuse them directly.
"""

from dataclasses import dataclass, field
from math import gcd, isqrt

from divdelta import arith, classify, delta, graphs, kernels, polyfam, realize

_FAILURE_CAP = 50


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failure_count: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def tick(self, count: int = 1) -> None:
        self.checked += count

    def fail(self, message: str) -> None:
        self.failure_count += 1
        if len(self.failures) < _FAILURE_CAP:
            self.failures.append(message)


def _dstar(n: int) -> set[int]:
    return {abs(d - n // d) for d in range(1, isqrt(n) + 1) if n % d == 0}


def _factor_with(n: int, spf) -> list[tuple[int, int]]:
    fac = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        fac.append((p, e))
    return fac


def suite_bounds(max_n: int = 100_000, triples=None, flags=None) -> SuiteResult:
    """Every triple up to max_n against the structural bounds, the two regime
    maxima with their exact equality cases, and the difference-set ceilings
    for every member."""
    res = SuiteResult("bounds")
    if triples is None:
        triples = kernels.scan_triples(max_n)
    if flags is None:
        flags = kernels.scan_member_flags(max_n)
    seen_dup_extremal = 0
    for n, x, y, z in triples:
        res.tick()
        if not delta.is_delta_triple(n, x, y, z):
            res.fail(f"scan emitted a non-triple ({x},{y},{z}) for {n}")
            continue
        if not (x < y < 2 * x) or y % x == 0:
            res.fail(f"y/x window violated by ({x},{y},{z}) for {n}")
        if z >= x * (x + 1):
            res.fail(f"z < x(x+1) violated by ({x},{y},{z}) for {n}")
        if not (1 <= z // x <= x):
            res.fail(f"z = ax+b quotient outside [1, x] for ({x},{y},{z}), n={n}")
        if not (1 <= z // y < x):
            res.fail(f"z = cy+d quotient outside [1, x) for ({x},{y},{z}), n={n}")
        if z * gcd(x, y) >= x * y:
            res.fail(f"z*gcd(x,y) < xy violated by ({x},{y},{z}) for {n}")
        if y == z:
            cap = x * (2 * x - 1) * (3 * x - 2)
            if n > cap:
                res.fail(f"duplicated maximum exceeded: n={n} > {cap} at x={x}")
            if (n == cap) != (y == 2 * x - 1):
                res.fail(f"duplicated equality case wrong for n={n}, triple ({x},{y},{z})")
            if n == cap:
                seen_dup_extremal += 1
        else:
            cap = x * x * (x + 1) * (x + 1) * (x * x + x - 1)
            if n > cap:
                res.fail(f"generic maximum exceeded: n={n} > {cap} at x={x}")
            if (n == cap) != ((y, z) == (x + 1, x * x + x - 1)):
                res.fail(f"generic equality case wrong for n={n}, triple ({x},{y},{z})")
    if max_n >= 24 and seen_dup_extremal == 0:
        res.fail("no duplicated extremal triple found; scan is incomplete")
    for n in range(2, max_n + 1):
        if flags[n]:
            res.tick()
            star = sorted(_dstar(n))
            nz = [v for v in star if v]
            below = [v for v in star if v != n - 1]
            if below and 2 * max(below) > n - 4:
                res.fail(f"second-largest difference above n/2 - 2 for member {n}")
            sset = set(star)
            best = max(
                (nz[i] + nz[j] for i in range(len(nz)) for j in range(i, len(nz)) if nz[i] + nz[j] in sset),
                default=None,
            )
            if best is None:
                res.fail(f"member {n} has empty intersection")
            elif 3 * best > 2 * n - 18:
                res.fail(f"intersection maximum above 2n/3 - 6 for member {n}")
    return res


def suite_classification(max_n: int = 100_000, flags=None, triples=None) -> SuiteResult:
    """Three membership paths over the whole range, the two exhaustive
    factor-shape characterisations, and the small-prime corollaries."""
    res = SuiteResult("classification")
    if flags is None:
        flags = kernels.scan_member_flags(max_n)
    if triples is None:
        triples = kernels.scan_triples(max_n)
    with_triple = bytearray(max_n + 1)
    for n, _, _, _ in triples:
        with_triple[n] = 1
    spf = kernels.spf_sieve(max_n)
    for n in range(2, max_n + 1):
        res.tick()
        fac = tuple(_factor_with(n, spf))
        verdict = classify.classify(n, factors=fac)
        member = flags[n] == 1
        if verdict.decision.is_member != member:
            res.fail(f"classify disagrees with the set oracle on {n} ({verdict.rule})")
        if (with_triple[n] == 1) != member:
            res.fail(f"triple path disagrees with the set oracle on {n}")
        if member:
            big = fac[-1][0]
            if big >= n // big:
                res.fail(f"member {n} has a dominating prime {big}")
    primes50 = [p for p in range(2, 50) if arith.is_prime(p)]
    for p in primes50:
        for q in primes50:
            if p == q:
                continue
            for k in range(1, 9):
                n = p**k * q
                if n > arith.CEILING:
                    continue
                res.tick()
                if classify.pkq_member(p, k, q) != delta.has_delta(n):
                    res.fail(f"pkq rule disagrees with oracle on {p}^{k} * {q}")
    primes100 = [p for p in range(2, 100) if arith.is_prime(p)]
    for i, p in enumerate(primes100):
        for j in range(i + 1, len(primes100)):
            q = primes100[j]
            for r in primes100[j + 1 :]:
                res.tick()
                if classify.pqr_member(p, q, r) != delta.has_delta(p * q * r):
                    res.fail(f"pqr rule disagrees with oracle on {p}*{q}*{r}")
    primes500 = [p for p in range(2, 500) if arith.is_prime(p)]
    for p in (13, 67, 79):
        for i, q in enumerate(primes500):
            if q <= p:
                continue
            for r in primes500[i + 1 :]:
                res.tick()
                if classify.pqr_member(p, q, r) or delta.has_delta(p * q * r):
                    res.fail(f"{p}*{q}*{r} should not be a member")
    return res


def _grid_families(a_max: int = 5, b_span: int = 5):
    fams = []
    for a in range(1, a_max + 1):
        for b in range(-b_span, b_span + 1):
            for d in range(1, 19):
                try:
                    fams.append(polyfam.make_family(a, b, 2 * b - d))
                except ValueError:
                    continue
    return fams


def suite_families() -> SuiteResult:
    """Named families from the worked examples, the duplicated-maximum
    agreement, and a grid of valid coefficient triples checked value by
    value against the membership oracle."""
    res = SuiteResult("families")
    named = {
        (1, 0, -1): (3, -2, 2),
        (1, 2, 1): (1, 0, 2),
        (3, 4, 7): (9, 10, 1),
        (1, -1, -5): (1, -3, 5),
        (2, -4, -10): (3, -8, 4),
    }
    for (a, b, c), (alpha, beta, n0) in named.items():
        res.tick()
        fam = polyfam.make_family(a, b, c)
        if (fam.alpha, fam.beta, fam.n0) != (alpha, beta, n0):
            res.fail(f"family ({a},{b},{c}) resolved to {fam}, expected {(alpha, beta, n0)}")
    base = polyfam.make_family(1, 0, -1)
    for x in range(2, 25):
        res.tick()
        bound, _ = delta.extremal_bound(x, delta.DUPLICATED)
        if base.value(x) != bound:
            res.fail(f"family (1,0,-1) at x={x} is {base.value(x)}, duplicated maximum is {bound}")
    fams = _grid_families()
    if len(fams) < 25:
        res.fail(f"coefficient grid produced only {len(fams)} families")
    for fam in fams:
        for x, n in polyfam.family_members(fam, 21):
            res.tick()
            if not delta.has_delta(n):
                res.fail(f"family {fam} value {n} at x={x} is not a member")
    return res


def _check_graph(res: SuiteResult, s, oracle_pairs: bool = True, census: bool = True):
    labels = s.i_labels
    phi = graphs.factor_graph(s)
    for i, u in enumerate(labels):
        for v in labels[i + 1 :]:
            res.tick()
            m = graphs.sigma(s, u, v)
            if oracle_pairs and m != graphs.sigma_oracle(s, u, v):
                res.fail(f"sigma formula vs oracle mismatch on ({u}, {v})")
            if m > 0:
                gap = abs(s.degree(u) - s.degree(v))
                if gap not in _dstar(m):
                    res.fail(f"|d_u - d_v| = {gap} not a complementary difference of {m}")
                if gap > m - 1:
                    res.fail(f"|d_u - d_v| = {gap} exceeds sigma - 1 = {m - 1}")
                if s.degree(u) == s.degree(v) and not arith.is_perfect_square(m)[0]:
                    res.fail(f"equal degrees with non-square multiplicity {m}")
    if census:
        res.tick()
        if phi.weighted_edge_count() != graphs.two_switch_count(s):
            res.fail("weighted factor-graph size differs from the 2-switch census")
    for cyc in phi.induced_cycles():
        res.tick()
        if len(cyc) > 4:
            res.fail(f"induced cycle of length {len(cyc)} in a factor graph")
        if len(cyc) == 3:
            mults = [phi.multiplicity(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])]
            if len(set(mults)) == 1:
                n = mults[0]
                if not arith.is_perfect_square(n)[0] and not delta.has_delta(n):
                    res.fail(f"{n}-simple triangle with n neither square nor member")
            if not any(arith.is_perfect_square(m)[0] and m > 0 for m in mults):
                if graphs.triangle_type(s, cyc) is not graphs.TriangleType.TYPE_0:
                    res.fail(f"square-free triangle {cyc} is not transitive")
    union = 0
    for m in s.masks:
        union |= m
    if s.k_size and union == (1 << s.k_size) - 1 and s.i_labels:
        # a lone factor vertex is itself isolated (degree zero)
        isolated = any(
            all(graphs.sigma(s, u, v) == 0 for v in labels if v != u) for u in labels
        )
        if not isolated:
            res.tick()
            if not graphs.shape_stats(s)[2]:
                res.fail("covered clique with no isolated factor vertex, yet unbalanced")


def suite_graphs(max_n: int = 2000) -> SuiteResult:
    """Formula-versus-enumeration on the random corpus, the golden
    realization, and the realize round trip up to max_n."""
    res = SuiteResult("graphs")
    for s in graphs.random_corpus():
        _check_graph(res, s)

    params = realize.realization_params((24, 2, 3, 3), 3)
    res.tick()
    if (params.k_size, params.d_b, params.d_c) != (18, 8, 13) or (
        params.eta_ab,
        params.eta_bc,
        params.eta_ac,
    ) != (0, 5, 1):
        res.fail(f"golden realization parameters wrong: {params}")
    golden = realize.realize_graph(params)
    _check_graph(res, golden)
    res.tick()
    if not graphs.is_n_simple_type0_triangle(golden, 24):
        res.fail("golden realization is not a 24-simple transitive triangle")
    stats = graphs.graph_stats(golden)
    res.tick()
    if not (stats.balanced and stats.active and stats.indecomposable_active):
        res.fail(f"golden realization stats wrong: {stats}")

    limit = min(max_n, 2000)
    for n, x, y, z in kernels.scan_triples(limit):
        star = _dstar(n)
        nz = sorted(v for v in star if v)
        plus = {a + b for i, a in enumerate(nz) for b in nz[i:]}
        for d_a in (z, z + 1, x + z):
            res.tick()
            p = realize.realization_params((n, x, y, z), d_a)
            s = realize.realize_graph(p)
            if not graphs.is_n_simple_type0_triangle(s, n):
                res.fail(f"round trip failed for n={n}, triple ({x},{y},{z}), d_a={d_a}")
            jump = s.degree("c") - s.degree("a")
            if jump not in star or jump not in plus:
                res.fail(f"degree spread {jump} not in both difference sets for n={n}")
    return res


_SUITES = {
    "bounds": suite_bounds,
    "classification": suite_classification,
    "families": suite_families,
    "graphs": suite_graphs,
}


def run_suites(names, max_n: int = 100_000) -> list[SuiteResult]:
    if "all" in names:
        names = list(_SUITES)
    out = []
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}")
        fn = _SUITES[name]
        out.append(fn() if name == "families" else fn(max_n))
    return out
