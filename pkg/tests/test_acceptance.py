"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.  The million-range scans
are shared session fixtures (see conftest).
"""

import time
from math import gcd, isqrt

from divdelta import arith, classify, delta, graphs, kernels, realize, verify

MILLION = 1_000_000


def _report(num, label, started, detail):
    elapsed = time.perf_counter() - started
    print(f"\n[acceptance] criterion {num} ({label}): PASS — {detail} [{elapsed:.2f}s]")


def _factor_from(n, spf):
    fac = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        fac.append((p, e))
    return fac


def _square_roots_of(fac):
    roots = [1]
    for p, e in fac:
        base = len(roots)
        pk = 1
        for _ in range(e // 2):
            pk *= p
            roots.extend(roots[i] * pk for i in range(base))
    return roots


def test_criterion_1_smallest_members():
    t0 = time.perf_counter()
    members = delta.delta_set(1000)
    assert members[:2] == [24, 40]
    assert all(n % 2 == 0 for n in members if n < 105)
    assert 105 in members
    _report(1, "smallest members", t0, f"{len(members)} members below 1000, first odd is 105")


def test_criterion_2_membership_paths_agree(member_flags_1m, triples_1m):
    t0 = time.perf_counter()
    limit = 100_000
    with_triple = bytearray(limit + 1)
    for n, _, _, _ in triples_1m:
        if n > limit:
            break
        with_triple[n] = 1
    spf = kernels.spf_sieve(limit)
    for n in range(2, limit + 1):
        sets_path = member_flags_1m[n] == 1
        assert (with_triple[n] == 1) == sets_path, n
        verdict = classify.classify(n, factors=tuple(_factor_from(n, spf)))
        assert verdict.decision.is_member == sets_path, n
    _report(2, "oracle triple-consistency", t0, f"three paths agree on 2..{limit}")


def test_criterion_3_bound_suite(member_flags_1m, triples_1m):
    t0 = time.perf_counter()
    res = verify.suite_bounds(MILLION, triples=triples_1m, flags=member_flags_1m)
    assert res.ok, res.failures
    _report(3, "triple bounds", t0, f"{res.checked} checks, {len(triples_1m)} triples to 10^6")


def test_criterion_4_two_and_three_prime_rules():
    t0 = time.perf_counter()
    primes50 = [p for p in range(2, 50) if arith.is_prime(p)]
    checked = 0
    for p in primes50:
        for q in primes50:
            if p == q:
                continue
            for k in range(1, 9):
                n = p**k * q
                if n > arith.CEILING:
                    continue
                assert classify.pkq_member(p, k, q) == delta.has_delta(n), (p, k, q)
                checked += 1
    primes100 = [p for p in range(2, 100) if arith.is_prime(p)]
    for i, p in enumerate(primes100):
        for j in range(i + 1, len(primes100)):
            for r in primes100[j + 1 :]:
                q = primes100[j]
                assert classify.pqr_member(p, q, r) == delta.has_delta(p * q * r)
                checked += 1
    primes500 = [p for p in range(2, 500) if arith.is_prime(p)]
    small_members = set()
    for p in (2, 3, 5, 7):
        for i, q in enumerate(primes500):
            if q <= p:
                continue
            for r in primes500[i + 1 :]:
                if classify.pqr_member(p, q, r):
                    n = p * q * r
                    assert delta.has_delta(n)
                    small_members.add(n)
                checked += 1
    assert small_members == {105, 385, 1729}
    _report(4, "exhaustive classification rules", t0, f"{checked} grid points, p<=7 members {sorted(small_members)}")


def test_criterion_5_primitivity_structure(member_flags_1m):
    t0 = time.perf_counter()
    assert [(d.alpha, d.m) for d in delta.primitive_decompositions(5616)] == [(3, 624), (2, 1404)]
    spf = kernels.spf_sieve(MILLION)
    flags = member_flags_1m

    def primitive(n, fac):
        for a in _square_roots_of(fac):
            if a >= 2 and flags[n // (a * a)]:
                return False
        return True

    scanned = 0
    for n in range(2, MILLION + 1):
        if not flags[n]:
            continue
        fac = _factor_from(n, spf)
        if all(e % 2 == 0 for _, e in fac):
            continue  # perfect squares are exempt from the uniqueness law
        parts = []
        for a in _square_roots_of(fac):
            m = n // (a * a)
            if m >= 2 and flags[m] and primitive(m, _factor_from(m, spf)):
                parts.append(m)
        scanned += 1
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                assert gcd(parts[i], parts[j]) > 1, (n, parts)
    _report(5, "primitivity structure", t0, f"{scanned} non-square members scanned to 10^6")


def test_criterion_6_squares(member_flags_1m):
    t0 = time.perf_counter()
    square_members = [k * k for k in range(2, 1001) if member_flags_1m[k * k]]
    assert square_members[0] == 900
    primitive_squares = [n for n in square_members if delta.is_delta_primitive(n)]
    assert primitive_squares[0] == 900 and primitive_squares[1] == 7056
    assert delta.double_representation(900, 7056, 1) == (14, 5, 176400)
    _report(6, "squares", t0, f"{len(square_members)} square members to 10^6, primitives start {primitive_squares[:2]}")


def test_criterion_7_generating_families():
    t0 = time.perf_counter()
    res = verify.suite_families()
    assert res.ok, res.failures
    _report(7, "generating families", t0, f"{res.checked} family values verified against the oracle")


def test_criterion_8_realizer_golden():
    t0 = time.perf_counter()
    p = realize.realization_params((24, 2, 3, 3), 3)
    assert p.k_size == 18
    assert (p.d_a, p.d_b, p.d_c) == (3, 8, 13)
    assert (p.eta_ab, p.eta_bc, p.eta_ac) == (0, 5, 1)
    s = realize.realize_graph(p)
    for u, v in (("a", "b"), ("b", "c"), ("a", "c")):
        assert graphs.sigma(s, u, v) == 24
    assert graphs.triangle_type(s, "abc") is graphs.TriangleType.TYPE_0
    st = graphs.graph_stats(s)
    assert st.balanced and st.active and st.indecomposable_active
    _report(8, "realizer golden test", t0, "K=18, degrees (3,8,13), eta (0,5,1), all sigma 24")


def _realized_fleet():
    fleet = [realize.realize_graph(realize.realization_params((24, 2, 3, 3), 3))]
    fleet += realize.active_realizations((24, 2, 3, 3))
    fleet += realize.active_realizations((40, 4, 5, 5))
    return fleet


def test_criterion_9_sigma_formula_vs_oracle(corpus):
    t0 = time.perf_counter()
    pairs = 0
    for s in _realized_fleet() + corpus:
        total = 0
        for i, u in enumerate(s.i_labels):
            for v in s.i_labels[i + 1 :]:
                m = graphs.sigma(s, u, v)
                assert m == graphs.sigma_oracle(s, u, v), (s, u, v)
                total += m
                pairs += 1
        assert total == graphs.two_switch_count(s)
    _report(9, "sigma formula vs oracle", t0, f"{pairs} pairs across realizations and 500 random graphs")


def test_criterion_10_no_rogue_simple_triangles(corpus, member_flags_1m):
    t0 = time.perf_counter()
    triangles = 0
    for s in corpus:
        phi = graphs.factor_graph(s)
        for cyc in phi.induced_cycles():
            if len(cyc) != 3:
                continue
            mults = {phi.multiplicity(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
            if len(mults) == 1:
                n = mults.pop()
                triangles += 1
                if isqrt(n) ** 2 != n:
                    assert n >= 2 and member_flags_1m[n], (s, cyc, n)
    _report(10, "no simple triangle without membership", t0, f"{triangles} equal-multiplicity triangles examined")


def test_criterion_11_tau_constraint(member_flags_1m):
    t0 = time.perf_counter()
    spf = kernels.spf_sieve(MILLION)
    allowed, members = 0, 0
    for n in range(2, MILLION + 1):
        if not member_flags_1m[n]:
            continue
        members += 1
        if n in (24, 40):
            continue
        fac = _factor_from(n, spf)
        if len(fac) == 3 and all(e == 1 for _, e in fac):
            continue
        t = 1
        for _, e in fac:
            t *= e + 1
        assert t == 12 or (t >= 15 and not arith.is_prime(t)), (n, t)
        allowed += 1
    _report(11, "tau constraint", t0, f"{allowed} of {members} members checked against the divisor-count law")
