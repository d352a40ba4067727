"""Exact integer arithmetic on word-sized naturals.

Everything rejects 0 and values above the 2**63 - 1 ceiling, and everything
is deterministic: plain trial division, no probabilistic steps.
"""

from dataclasses import dataclass
from math import isqrt

from divdelta import kernels

CEILING = kernels.CEILING


def check_natural(n: int, name: str = "n", minimum: int = 1) -> None:
    """Reject non-integers, values below ``minimum``, and ceiling overflow."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")
    if n > CEILING:
        raise ValueError(f"{name} exceeds the 2**63 - 1 ceiling")


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition; ``factors`` carries strictly increasing primes."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def tau(self) -> int:
        t = 1
        for _, e in self.factors:
            t *= e + 1
        return t

    def value(self) -> int:
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division; empty factor list exactly for n = 1."""
    check_natural(n)
    return Factorization(n, tuple(kernels.factor_pairs(n)))


def is_prime(n: int) -> bool:
    check_natural(n)
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    fac = factorize(n)
    divs = [1]
    for p, e in fac.factors:
        base = len(divs)
        pk = 1
        for _ in range(e):
            pk *= p
            divs.extend(divs[i] * pk for i in range(base))
    divs.sort()
    return divs


def tau(n: int) -> int:
    """Number of divisors of n."""
    return factorize(n).tau()


def valuation(p: int, n: int) -> int:
    """Largest k >= 0 with p**k dividing n; p must be prime."""
    check_natural(p, "p")
    check_natural(n)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """(True, root) when n is a square, else (False, None)."""
    check_natural(n)
    r = isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def squarefree_part(n: int) -> int:
    """Product of the primes appearing in n with odd exponent; n divided by it
    is always a perfect square."""
    fac = factorize(n)
    s = 1
    for p, e in fac.factors:
        if e % 2:
            s *= p
    return s
