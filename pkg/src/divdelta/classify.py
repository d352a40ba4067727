"""Membership classification by obstruction rules, with oracle fallback.

Each rule either decides n outright from the shape of its factorization or
passes.  Rules fire in a fixed order so explanations are deterministic:

    TwoOdd             n = 2k, k odd                          -> out
    PrimePower         n = p^k                                -> out
    TwoPrimesLowExp    n = p^a q^b, a, b <= 2                 -> out
    PkQ                n = p^k q: in iff 2^(odd k >= 3) * 3 or 5
    DominatingPrime    n = p*k, prime p >= k                  -> out
    TwoPrimeDominated  n = p^x q^y, y >= 2, q > p^x           -> out
    PQR                n = pqr: decided by the pqr test
    TauFilter          divisor count outside {12} u {composite >= 15} -> out
    Oracle             brute membership check

The rules are necessary-condition filters, not a complete decision
procedure; whatever they cannot settle goes to the oracle.  In checked mode
every rule verdict is also compared against the oracle.
"""

from dataclasses import dataclass
from enum import Enum

from divdelta import arith, delta
from divdelta.arith import check_natural
from divdelta.delta import DeltaTriple

RULES = (
    "TwoOdd",
    "PrimePower",
    "TwoPrimesLowExp",
    "PkQ",
    "DominatingPrime",
    "TwoPrimeDominated",
    "PQR",
    "TauFilter",
    "Oracle",
)


class Decision(Enum):
    MEMBER = "Member"
    NON_MEMBER = "NonMember"
    ORACLE_MEMBER = "OracleMember"
    ORACLE_NON_MEMBER = "OracleNonMember"

    @property
    def is_member(self) -> bool:
        return self in (Decision.MEMBER, Decision.ORACLE_MEMBER)


@dataclass(frozen=True)
class ClassVerdict:
    n: int
    decision: Decision
    rule: str
    witness: DeltaTriple | None = None


def pkq_member(p: int, k: int, q: int) -> bool:
    """Membership for n = p^k * q with p, q distinct primes.

    Holds exactly for n = 2^k * q with k odd, k >= 3, and q in {3, 5}.
    """
    check_natural(p, "p")
    check_natural(q, "q")
    check_natural(k, "k")
    if not arith.is_prime(p) or not arith.is_prime(q):
        raise ValueError("p and q must be prime")
    if p == q:
        raise ValueError("p and q must be distinct")
    return p == 2 and q in (3, 5) and k >= 3 and k % 2 == 1


def pqr_member(p: int, q: int, r: int) -> bool:
    """Membership for n = p*q*r, primes p < q < r.

    Holds exactly when (r - p + 1)(q - p + 1) = p^2 - p + 1 or the pair
    (q, r) is (p + 2, 2p + 1) or (2p - 1, 3p - 2).
    """
    for v, name in ((p, "p"), (q, "q"), (r, "r")):
        check_natural(v, name)
        if not arith.is_prime(v):
            raise ValueError(f"{name} must be prime, got {v}")
    if not p < q < r:
        raise ValueError(f"need p < q < r, got ({p}, {q}, {r})")
    if (r - p + 1) * (q - p + 1) == p * p - p + 1:
        return True
    return (q, r) in ((p + 2, 2 * p + 1), (2 * p - 1, 3 * p - 2))


def tau_filter(n: int, factors: tuple[tuple[int, int], ...] | None = None) -> bool:
    """False means definitely not a member: n outside {24, 40}, not a product
    of three distinct primes, and divisor count outside {12} u {composite >= 15}.
    True means inconclusive."""
    check_natural(n, minimum=2)
    if n in (24, 40):
        return True
    fac = factors if factors is not None else arith.factorize(n).factors
    if len(fac) == 3 and all(e == 1 for _, e in fac):
        return True
    t = 1
    for _, e in fac:
        t *= e + 1
    return t == 12 or (t >= 15 and not arith.is_prime(t))


def _rule_verdict(n, fac):
    """(rule, member) for the first decisive rule, or None when every rule passes."""
    if n % 4 == 2:
        return "TwoOdd", False
    if len(fac) == 1:
        return "PrimePower", False
    if len(fac) == 2:
        (p1, e1), (p2, e2) = fac
        if e1 <= 2 and e2 <= 2:
            return "TwoPrimesLowExp", False
        if e1 == 1 or e2 == 1:
            if e2 == 1:
                p, k, q = p1, e1, p2
            else:
                p, k, q = p2, e2, p1
            return "PkQ", pkq_member(p, k, q)
    big = fac[-1][0]
    if big >= n // big:
        return "DominatingPrime", False
    if len(fac) == 2:
        (p1, e1), (p2, e2) = fac
        if e2 >= 2 and p2 > p1**e1:
            return "TwoPrimeDominated", False
    if len(fac) == 3 and all(e == 1 for _, e in fac):
        return "PQR", pqr_member(fac[0][0], fac[1][0], fac[2][0])
    if not tau_filter(n, factors=fac):
        return "TauFilter", False
    return None


def classify(
    n: int,
    factors: tuple[tuple[int, int], ...] | None = None,
    oracle_check: bool = False,
) -> ClassVerdict:
    """Decide membership of n, naming the rule that settled it.

    ``factors`` lets sweeps reuse a sieve-supplied factorization.  With
    ``oracle_check`` every rule verdict is re-derived from the oracle; a
    disagreement raises RuntimeError (it would mean a rule is implemented
    wrong, since each one is a proved obstruction or characterisation).
    """
    check_natural(n, minimum=2)
    fac = factors if factors is not None else arith.factorize(n).factors
    hit = _rule_verdict(n, fac)
    if hit is None:
        if delta.has_delta(n):
            witness = delta.delta_triples(n)[0]
            return ClassVerdict(n, Decision.ORACLE_MEMBER, "Oracle", witness)
        return ClassVerdict(n, Decision.ORACLE_NON_MEMBER, "Oracle")
    rule, member = hit
    if oracle_check and delta.has_delta(n) != member:
        raise RuntimeError(f"rule {rule} contradicts the oracle on n={n}")
    if member:
        triples = delta.delta_triples(n)
        if not triples:
            raise RuntimeError(f"rule {rule} claims {n} is a member but no witness exists")
        return ClassVerdict(n, Decision.MEMBER, rule, triples[0])
    return ClassVerdict(n, Decision.NON_MEMBER, rule)
