"""Degree-3 generating families and the square scan over their values.

A family is the integer polynomial n(x) = (ax + b)(2ax + c)(alpha*x + beta)
with alpha = 3a/(2b - c) and beta = (2c - b)/(2b - c); when 2b - c divides
gcd(3a, 2c - b) both quotients are integers, and every value from some
threshold n0 on is a member, witnessed by the duplicated triple
(ax + b, 2ax + c, 2ax + c).

n0 is the least x from which the chain

    1 < ax + b < 2ax + c < sqrt(n(x))

holds for all larger x.  All three constraint polynomials have positive
leading coefficients, so past a Cauchy root bound they stay positive; we
scan the finite window below that bound.  Evaluation is exact integer
arithmetic throughout, with the square-root comparison done as
(2ax + c)^2 < n(x).
"""

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from divdelta import arith, delta
from divdelta.arith import CEILING, check_natural

_N0_SCAN_CAP = 10**6


@dataclass(frozen=True)
class PolyFamily:
    a: int
    b: int
    c: int
    alpha: int
    beta: int
    n0: int

    def components(self, x: int) -> tuple[int, int, int]:
        return (self.a * x + self.b, 2 * self.a * x + self.c, self.alpha * x + self.beta)

    def value(self, x: int) -> int:
        f1, f2, f3 = self.components(x)
        return f1 * f2 * f3


class SquareHit(NamedTuple):
    x: int
    value: int
    primitive: bool


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _root_bound(coeffs):
    """Integer upper bound on the real roots of a polynomial with positive
    leading coefficient (coefficients ascending)."""
    lead = coeffs[-1]
    top = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return 1 + (top + lead - 1) // lead


def _chain_holds(a, b, c, alpha, beta, x):
    f1 = a * x + b
    f2 = 2 * a * x + c
    if not (1 < f1 < f2):
        return False
    return f2 * f2 < f1 * f2 * (alpha * x + beta)


def _find_n0(a, b, c, alpha, beta):
    growth = _poly_mul(_poly_mul([b, a], [c, 2 * a]), [beta, alpha])
    square = [c * c, 4 * a * c, 4 * a * a]
    margin = growth.copy()
    for i, s in enumerate(square):
        margin[i] -= s
    bound = max(
        _root_bound([b - 1, a]),
        _root_bound([c - b, a]),
        _root_bound(margin),
    )
    if bound > _N0_SCAN_CAP:
        raise ValueError(f"threshold search for ({a}, {b}, {c}) exceeds the scan cap")
    n0 = 1
    for x in range(1, bound + 1):
        if not _chain_holds(a, b, c, alpha, beta, x):
            n0 = x + 1
    return n0


def make_family(a: int, b: int, c: int) -> PolyFamily:
    """Build the family for (a, b, c); rejects a <= 0, 2b <= c, and
    coefficient triples failing the divisibility condition."""
    for v, name in ((a, "a"), (b, "b"), (c, "c")):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{name} must be an integer, got {v!r}")
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    d = 2 * b - c
    if d <= 0:
        raise ValueError(f"need 2b > c, got 2*{b} - {c} = {d}")
    if gcd(3 * a, abs(2 * c - b)) % d:
        raise ValueError(f"(2b - c) = {d} does not divide gcd(3a, 2c - b)")
    alpha = 3 * a // d
    beta = (2 * c - b) // d
    return PolyFamily(a, b, c, alpha, beta, _find_n0(a, b, c, alpha, beta))


def family_members(fam: PolyFamily, count: int) -> list[tuple[int, int]]:
    """(x, n(x)) for the first ``count`` x at and above the threshold.

    Every value is re-checked against the membership oracle before being
    returned; a failure would mean the family construction is wrong, so it
    raises instead of silently dropping the value.
    """
    check_natural(count, "count")
    out = []
    for x in range(fam.n0, fam.n0 + count):
        n = fam.value(x)
        if n > CEILING:
            raise ValueError(f"family value at x={x} exceeds the 2**63 - 1 ceiling")
        if not delta.has_delta(n):
            raise RuntimeError(f"family {fam} produced non-member {n} at x={x}")
        out.append((x, n))
    return out


def square_scan(fam: PolyFamily, xmax: int) -> list[SquareHit]:
    """Perfect squares among family values for x in [n0, xmax], each annotated
    with the primitivity of the value."""
    check_natural(xmax, "xmax")
    if xmax < fam.n0:
        raise ValueError(f"xmax must be >= the family threshold {fam.n0}")
    hits = []
    for x in range(fam.n0, xmax + 1):
        n = fam.value(x)
        if n > CEILING:
            raise ValueError(f"family value at x={x} exceeds the 2**63 - 1 ceiling")
        ok, _ = arith.is_perfect_square(n)
        if ok:
            hits.append(SquareHit(x, n, delta.is_delta_primitive(n)))
    return hits
