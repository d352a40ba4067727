from math import isqrt

import pytest

from divdelta import delta, polyfam
from divdelta.polyfam import _chain_holds


def test_named_families_resolve():
    fam = polyfam.make_family(1, 0, -1)
    assert (fam.alpha, fam.beta, fam.n0) == (3, -2, 2)
    assert fam.value(2) == 24 and fam.value(3) == 105

    fam = polyfam.make_family(1, 2, 1)
    assert (fam.alpha, fam.beta, fam.n0) == (1, 0, 2)
    assert fam.value(2) == 2 * 4 * 5 == 40

    fam = polyfam.make_family(3, 4, 7)
    assert (fam.alpha, fam.beta) == (9, 10)
    assert fam.components(1) == (7, 13, 19) and fam.value(1) == 1729

    fam = polyfam.make_family(1, -1, -5)
    assert (fam.alpha, fam.beta, fam.n0) == (1, -3, 5)
    assert fam.value(5) == 4 * 5 * 2 == 40

    fam = polyfam.make_family(2, -4, -10)
    assert (fam.alpha, fam.beta, fam.n0) == (3, -8, 4)
    assert fam.value(4) == 96


def test_make_family_rejections():
    with pytest.raises(ValueError):
        polyfam.make_family(0, 1, 1)
    with pytest.raises(ValueError):
        polyfam.make_family(1, 0, 5)  # 2b <= c
    with pytest.raises(ValueError):
        polyfam.make_family(1, 1, 0)  # 2 does not divide gcd(3, -1)


def test_threshold_is_minimal():
    for a, b, c in ((1, 0, -1), (1, 2, 1), (1, -1, -5), (2, -4, -10), (3, 4, 7)):
        fam = polyfam.make_family(a, b, c)
        for x in range(fam.n0, fam.n0 + 40):
            assert _chain_holds(a, b, c, fam.alpha, fam.beta, x)
        if fam.n0 > 1:
            assert not _chain_holds(a, b, c, fam.alpha, fam.beta, fam.n0 - 1)


def test_family_members_examples():
    fam = polyfam.make_family(1, 0, -1)
    assert polyfam.family_members(fam, 2) == [(2, 24), (3, 105)]
    fam = polyfam.make_family(1, 2, 1)
    assert polyfam.family_members(fam, 1) == [(2, 40)]
    fam = polyfam.make_family(1, -1, -5)
    assert polyfam.family_members(fam, 1) == [(5, 40)]


def test_family_matches_duplicated_maximum():
    fam = polyfam.make_family(1, 0, -1)
    for x in range(2, 30):
        bound, triple = delta.extremal_bound(x, delta.DUPLICATED)
        assert fam.value(x) == bound
        assert triple.as_tuple() == (x, 2 * x - 1, 2 * x - 1)


def test_family_values_carry_duplicated_witness():
    for coeffs in ((1, 0, -1), (1, 2, 1), (3, 4, 7)):
        fam = polyfam.make_family(*coeffs)
        for x, n in polyfam.family_members(fam, 10):
            f1, f2, _ = fam.components(x)
            assert delta.is_delta_triple(n, f1, f2, f2)


def test_square_scan_matches_brute():
    for coeffs in ((1, 0, -1), (1, 2, 1), (2, -4, -10)):
        fam = polyfam.make_family(*coeffs)
        hits = polyfam.square_scan(fam, fam.n0 + 3000)
        brute = [
            x
            for x in range(fam.n0, fam.n0 + 3001)
            if isqrt(fam.value(x)) ** 2 == fam.value(x)
        ]
        assert [h.x for h in hits] == brute
        for h in hits:
            assert delta.has_delta(h.value)
            assert h.primitive == delta.is_delta_primitive(h.value)


def test_square_scan_rejects_below_threshold():
    fam = polyfam.make_family(1, 0, -1)
    with pytest.raises(ValueError):
        polyfam.square_scan(fam, fam.n0 - 1)


def _anchored_identity_survivors(coef_bound, anchors):
    """Candidates (X, Y, Z) of positive-slope linear polynomials whose product
    identity (Y - X + 1)(Z - X + 1) = X^2 - X + 1 holds at every anchor.

    Agreement at three points forces polynomial identity (degree <= 2), so
    anything strictness misses here cannot hold on 50 consecutive integers.
    """
    survivors = []
    rng = range(-coef_bound, coef_bound + 1)
    for ax in range(1, coef_bound + 1):
        for bx in rng:
            r_at = [(ax * t + bx) ** 2 - (ax * t + bx) + 1 for t in anchors]
            for ay in range(1, coef_bound + 1):
                for by in rng:
                    p0 = (ay - ax) * anchors[0] + (by - bx + 1)
                    if p0 == 0 or r_at[0] % p0:
                        continue
                    q0 = r_at[0] // p0
                    for az in range(1, coef_bound + 1):
                        bz = q0 - (az - ax) * anchors[0] + bx - 1
                        if abs(bz) > coef_bound:
                            continue
                        good = all(
                            ((ay - ax) * t + (by - bx + 1)) * ((az - ax) * t + (bz - bx + 1)) == r
                            for t, r in zip(anchors, r_at)
                        )
                        if good:
                            survivors.append(((ax, bx), (ay, by), (az, bz)))
    return survivors


def _is_window_family(xp, yp, zp, t0, width):
    for t in range(t0, t0 + width):
        x = xp[0] * t + xp[1]
        y = yp[0] * t + yp[1]
        z = zp[0] * t + zp[1]
        if not (1 < x < y <= z):
            return False
        if not delta.is_delta_triple(x * y * z, x, y, z):
            return False
    return True


def test_no_linear_family_with_product_value():
    """No linear (X, Y, Z) with positive slopes and |coefficients| <= 10 forms
    a witness triple for the product X*Y*Z on 50 consecutive arguments."""
    survivors = _anchored_identity_survivors(10, (10, 35, 70))
    assert survivors == []
    # cross-check the anchor shortcut against literal window checking
    for ax in range(1, 4):
        for bx in range(-3, 4):
            for ay in range(1, 4):
                for by in range(-3, 4):
                    for az in range(1, 4):
                        for bz in range(-3, 4):
                            for t0 in range(1, 70):
                                assert not _is_window_family(
                                    (ax, bx), (ay, by), (az, bz), t0, 50
                                )
