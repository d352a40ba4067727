"""The divisor-delta property: membership, witnesses, and structure.

For n >= 2 collect the differences of complementary divisors,

    D*(n) = { |a - b| : a*b = n },

and the pairwise sums of its nonzero elements (a value may be added to
itself).  n has the property when some difference is itself such a sum.
Membership is equivalently certified by a triple (x, y, z) of divisors with
1 < x < y <= z < sqrt(n) and

    n/x - x = (n/y - y) + (n/z - z),

which cross-multiplies to (xy + xz - yz) * n = xyz * (z + y - x).  The two
characterisations are implemented as independent code paths and the test
suite insists they agree.

Members closed under square multiples decompose as alpha^2 * m with m
"primitive" (a member admitting no further such split); the duplicated
y = z case carries an extra descent identity on n.  Everything here is
exact integer arithmetic; square-root comparisons are done as z*z < n.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from divdelta import arith, kernels
from divdelta.arith import CEILING, check_natural

DUPLICATED = "duplicated"
GENERIC = "generic"


@dataclass(frozen=True)
class DivisorDiffSets:
    """D*(n) and the pairwise sums D+(n) of its nonzero elements, ascending."""

    n: int
    dstar: tuple[int, ...]
    dplus: tuple[int, ...]


@dataclass(frozen=True)
class DeltaTriple:
    """Witness triple (x, y, z) of divisors of n certifying membership."""

    n: int
    x: int
    y: int
    z: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def duplicated(self) -> bool:
        return self.y == self.z

    def verify(self) -> None:
        """Check the defining identity plus the structural bounds every
        valid triple must satisfy; raises RuntimeError on violation."""
        n, x, y, z = self.n, self.x, self.y, self.z
        if not is_delta_triple(n, x, y, z):
            raise RuntimeError(f"({x}, {y}, {z}) is not a valid triple for {n}")
        if not (x < y < 2 * x) or y % x == 0:
            raise RuntimeError(f"triple {self} violates the y/x window")
        if z >= x * (x + 1):
            raise RuntimeError(f"triple {self} violates z < x(x+1)")
        if z * gcd(x, y) >= x * y:
            raise RuntimeError(f"triple {self} violates z*gcd(x,y) < xy")


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """n = alpha**2 * m with m a primitive member."""

    n: int
    alpha: int
    m: int


@dataclass(frozen=True)
class DescentWitness:
    """Coprime split of a duplicated triple: x = d*a, y = d*b, gcd(a, b) = 1,
    tied to n by (2a - b) * n = d^2 * a * b * (2b - a)."""

    n: int
    x: int
    y: int
    d: int
    a: int
    b: int


def divisor_diff_sets(n: int) -> DivisorDiffSets:
    """D*(n) and D+(n) for n >= 2.

    D* contains n - 1 (pair 1, n) and contains 0 exactly when n is a square;
    D+ allows a difference to be paired with itself.
    """
    check_natural(n, minimum=2)
    star = sorted({n // d - d for d in arith.divisors(n) if d * d <= n})
    nz = [v for v in star if v]
    plus = sorted({nz[i] + nz[j] for i in range(len(nz)) for j in range(i, len(nz))})
    return DivisorDiffSets(n, tuple(star), tuple(plus))


@lru_cache(maxsize=1 << 18)
def has_delta(n: int) -> bool:
    """Membership via the difference/sum sets (the definition path)."""
    check_natural(n, minimum=2)
    return kernels.has_delta_sets(n)


def delta_triples(n: int) -> list[DeltaTriple]:
    """All witness triples for n, lexicographically ordered."""
    check_natural(n, minimum=2)
    out = [DeltaTriple(n, x, y, z) for x, y, z in kernels.delta_triples(n)]
    for t in out:
        t.verify()
    return out


def is_delta_triple(n: int, x: int, y: int, z: int) -> bool:
    """Defining conditions only: divisors, 1 < x < y <= z, z^2 < n, identity."""
    if not (1 < x < y <= z):
        return False
    if z * z >= n:
        return False
    if n % x or n % y or n % z:
        return False
    return n // x - x == (n // y - y) + (n // z - z)


def triple_number(x: int, y: int, z: int) -> int:
    """The unique n for which (x, y, z) is a witness triple.

    Solves the cross-multiplied identity for n and validates the result;
    raises ValueError when no such n exists.
    """
    check_natural(x, "x")
    check_natural(y, "y")
    check_natural(z, "z")
    if not (1 < x < y <= z):
        raise ValueError(f"need 1 < x < y <= z, got ({x}, {y}, {z})")
    den = x * y + x * z - y * z
    if den <= 0:
        raise ValueError(f"({x}, {y}, {z}) admits no n: nonpositive denominator")
    num = x * y * z * (z + y - x)
    if num % den:
        raise ValueError(f"({x}, {y}, {z}) admits no integer n")
    n = num // den
    if n > CEILING:
        raise ValueError("resulting n exceeds the 2**63 - 1 ceiling")
    if not is_delta_triple(n, x, y, z):
        raise ValueError(f"({x}, {y}, {z}) is not a witness triple for any n")
    return n


def delta_set(limit: int) -> list[int]:
    """Ascending members up to limit (definition path, sieved)."""
    check_natural(limit, "limit", minimum=2)
    flags = kernels.scan_member_flags(limit)
    return [n for n in range(2, limit + 1) if flags[n]]


def is_delta_primitive(n: int) -> bool:
    """Member admitting no split n = alpha^2 * m with alpha >= 2 and m a member."""
    check_natural(n, minimum=1)
    if n < 2 or not has_delta(n):
        return False
    for alpha in _square_divisor_roots(n):
        if alpha < 2:
            continue
        m = n // (alpha * alpha)
        if m >= 2 and has_delta(m):
            return False
    return True


def _square_divisor_roots(n: int) -> list[int]:
    """All alpha >= 1 with alpha^2 dividing n, ascending."""
    fac = arith.factorize(n)
    roots = [1]
    for p, e in fac.factors:
        base = len(roots)
        pk = 1
        for _ in range(e // 2):
            pk *= p
            roots.extend(roots[i] * pk for i in range(base))
    roots.sort()
    return roots


def primitive_decompositions(n: int) -> list[PrimitiveDecomposition]:
    """All splits n = alpha^2 * m with m primitive, ordered by m ascending.

    Only defined for members; nonempty for every member, and equal to
    [(1, n)] exactly when n is itself primitive.
    """
    check_natural(n, minimum=2)
    if not has_delta(n):
        raise ValueError(f"{n} does not have the property")
    decs = []
    for alpha in _square_divisor_roots(n):
        m = n // (alpha * alpha)
        if m >= 2 and is_delta_primitive(m):
            decs.append(PrimitiveDecomposition(n, alpha, m))
    decs.sort(key=lambda d: d.m)
    if not decs:
        raise RuntimeError(f"member {n} has no primitive part; this falsifies the descent argument")
    return decs


def triples_with_component(t: int) -> list[tuple[DeltaTriple, int]]:
    """The finitely many (triple, n) pairs whose triple contains t.

    Search region: x <= t, y = x + u with 1 <= u <= x - 1 and z = x + v with
    u <= v and u*v <= x^2 - 1 (positivity of the denominator); each candidate
    determines n uniquely and is kept only when the quotient is integral and
    the triple actually witnesses that n.
    """
    check_natural(t, "t", minimum=2)
    out = []
    for x in range(2, t + 1):
        for u in range(1, x):
            vmax = (x * x - 1) // u
            for v in range(u, vmax + 1):
                y = x + u
                z = x + v
                if t not in (x, y, z):
                    continue
                den = x * x - u * v
                num = x * y * z * (z + y - x)
                if num % den:
                    continue
                n = num // den
                if n > CEILING or not is_delta_triple(n, x, y, z):
                    continue
                out.append((DeltaTriple(n, x, y, z), n))
    out.sort(key=lambda pair: (pair[1], pair[0].x, pair[0].y, pair[0].z))
    return out


def descent_witness(n: int, x: int, y: int) -> DescentWitness:
    """Descent data for a duplicated triple (x, y, y) of n.

    Fails loudly (RuntimeError) if any of the three divisibility facts is
    violated -- that would falsify the descent law, not the input.
    """
    check_natural(n, minimum=2)
    if not is_delta_triple(n, x, y, y):
        raise ValueError(f"({x}, {y}, {y}) is not a witness triple for {n}")
    d = gcd(x, y)
    a = x // d
    b = y // d
    if (2 * a - b) * n != d * d * a * b * (2 * b - a):
        raise RuntimeError(f"descent identity failed for n={n}, x={x}, y={y}")
    g = gcd(2 * a - b, a * b * (2 * b - a))
    if 6 % g:
        raise RuntimeError(f"gcd bound failed for n={n}: gcd={g} does not divide 6")
    q = (2 * a - b) // gcd(2 * a - b, 6)
    if (d * d) % q:
        raise RuntimeError(f"square-part divisibility failed for n={n}: {q} does not divide {d * d}")
    return DescentWitness(n, x, y, d, a, b)


def extremal_bound(x: int, regime: str) -> tuple[int, DeltaTriple]:
    """Largest n carrying a triple with smallest component x, per regime.

    duplicated (y = z): n = x(2x-1)(3x-2) with triple (x, 2x-1, 2x-1);
    generic (y < z):    n = x^2 (x+1)^2 (x^2+x-1) with triple (x, x+1, x^2+x-1).
    """
    check_natural(x, "x", minimum=2)
    if regime == DUPLICATED:
        n = x * (2 * x - 1) * (3 * x - 2)
        t = (x, 2 * x - 1, 2 * x - 1)
    elif regime == GENERIC:
        n = x * x * (x + 1) * (x + 1) * (x * x + x - 1)
        t = (x, x + 1, x * x + x - 1)
    else:
        raise ValueError(f"regime must be {DUPLICATED!r} or {GENERIC!r}, got {regime!r}")
    if n > CEILING:
        raise ValueError("bound exceeds the 2**63 - 1 ceiling")
    triple = DeltaTriple(n, *t)
    triple.verify()
    return n, triple


def xyz_identity_holds(x: int, y: int, z: int) -> bool:
    """(y - x + 1)(z - x + 1) == x^2 - x + 1; for a witness triple this is
    equivalent to n = x*y*z."""
    if not (1 < x < y <= z):
        raise ValueError(f"need 1 < x < y <= z, got ({x}, {y}, {z})")
    return (y - x + 1) * (z - x + 1) == x * x - x + 1


def double_representation(m: int, l: int, k: int = 1) -> tuple[int, int, int]:
    """Two square-times-primitive representations of one number.

    For distinct primitive squares m and l returns (a, b, n) with
    a = k*sqrt(l)/g, b = k*sqrt(m)/g, g = gcd of the roots, and
    n = a^2 m = b^2 l.
    """
    check_natural(m, "m", minimum=2)
    check_natural(l, "l", minimum=2)
    check_natural(k, "k")
    if m == l:
        raise ValueError("the two squares must be distinct")
    ok_m, rm = arith.is_perfect_square(m)
    ok_l, rl = arith.is_perfect_square(l)
    if not ok_m or not ok_l:
        raise ValueError("both arguments must be perfect squares")
    if not is_delta_primitive(m) or not is_delta_primitive(l):
        raise ValueError("both squares must be primitive members")
    g = gcd(rm, rl)
    a = k * (rl // g)
    b = k * (rm // g)
    n = a * a * m
    if n > CEILING:
        raise ValueError("resulting n exceeds the 2**63 - 1 ceiling")
    if b * b * l != n:
        raise RuntimeError(f"representation mismatch: {a}^2*{m} != {b}^2*{l}")
    return a, b, n


def primitives_with_squarefree_part(s: int, limit: int) -> list[int]:
    """Primitive members up to limit whose square-free part is s.

    Candidates are exactly s*j^2, so the scan walks j upward.
    """
    check_natural(s, "s")
    check_natural(limit, "limit")
    if arith.squarefree_part(s) != s:
        raise ValueError(f"s must be square-free, got {s}")
    out = []
    j = 1
    while s * j * j <= limit:
        v = s * j * j
        if v >= 2 and is_delta_primitive(v):
            out.append(v)
        j += 1
    return out
