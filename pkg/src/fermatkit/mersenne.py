"""Mersenne numbers, multiplicative orders, and the 1640 propositions.

The operations here are verifiers: each one recomputes a claimed
divisibility fact from scratch and reports whether it holds, so a false
claim would surface as a False return (or a failed cross-check), never
be assumed.
"""

from dataclasses import dataclass

from .kernel import divisors, gcd
from .primes import is_prime


@dataclass(frozen=True)
class MersenneNumber:
    exponent: int
    value: int


@dataclass(frozen=True)
class OrderRecord:
    """Least k >= 1 with modulus | base**k - 1."""

    base: int
    modulus: int
    order: int


def mersenne(n):
    """The Mersenne number 2**n - 1 for n >= 1."""
    if n < 1:
        raise ValueError(f"mersenne requires exponent >= 1, got {n}")
    return MersenneNumber(n, (1 << n) - 1)


def order(base, modulus):
    """Multiplicative order of base mod modulus, by iterated multiplication.

    Requires base >= 2, modulus >= 3, gcd(base, modulus) == 1; without
    coprimality no power of the base is ever 1 mod the modulus.
    """
    if base < 2:
        raise ValueError(f"order requires base >= 2, got {base}")
    if modulus < 3:
        raise ValueError(f"order requires modulus >= 3, got {modulus}")
    if gcd(base, modulus) != 1:
        raise ValueError(
            f"no exponent exists: gcd({base}, {modulus}) != 1"
        )
    r = base % modulus
    k = 1
    while r != 1:
        r = r * base % modulus
        k += 1
    return OrderRecord(base, modulus, k)


def _order_dividing(base, n, modulus):
    """Least divisor d of n with base**d == 1 mod modulus, or None.

    Any exponent e with base**e == 1 is a multiple of the true order, so
    when this finds a hit the smallest hit *is* the order.
    """
    for d in divisors(n):
        if pow(base, d, modulus) == 1:
            return d
    return None


def flt_check(p, a):
    """Whether p divides a**(p-1) - 1, for prime p not dividing a."""
    if not is_prime(p):
        raise ValueError(f"flt_check requires a prime p, got {p}")
    if a % p == 0:
        raise ValueError(f"flt_check requires p not dividing a ({p} | {a})")
    return pow(a, p - 1, p) == 1


def divisibility_conjecture_check(p):
    """(k, holds): k = order of 2 mod p, holds = k divides p - 1.

    Fast path scans the divisors of p - 1; if none works the conjecture
    has failed and the order is recomputed by the plain iterative loop.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"requires an odd prime, got {p}")
    k = _order_dividing(2, p - 1, p)
    if k is None:
        k = order(2, p).order
    return k, (p - 1) % k == 0


def exponent_progression(m, limit):
    """All n <= limit with m | 2**n - 1, by direct residue testing.

    m must be odd (and >= 3); m may be composite. The result equals the
    multiples of the order of 2 mod m, but is computed independently.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"requires an odd m >= 3, got {m}")
    if limit < 1:
        raise ValueError(f"requires limit >= 1, got {limit}")
    hits = []
    r = 2 % m
    for n in range(1, limit + 1):
        if r == 1:
            hits.append(n)
        r = r * 2 % m
    return hits


def second_proposition_check(p):
    """Whether 2p divides (2**p - 1) - 1, for an odd prime p.

    Also evaluates the equivalent form p | 2**(p-1) - 1 and insists the
    two agree before answering.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"requires an odd prime, got {p}")
    direct = ((1 << p) - 2) % (2 * p) == 0
    alt = pow(2, p - 1, p) == 1
    if direct != alt:
        raise AssertionError(
            f"equivalent forms disagree for p={p}: {direct} vs {alt}"
        )
    return direct


def first_proposition_witness(n):
    """(d, M_d) witnessing that a composite exponent gives a composite value.

    d is the smallest prime divisor of n; 2**d - 1 is then a proper
    divisor of 2**n - 1.
    """
    if n < 4 or is_prime(n):
        raise ValueError(f"requires a composite n >= 4, got {n}")
    d = next(x for x in divisors(n) if x > 1)
    return d, (1 << d) - 1
