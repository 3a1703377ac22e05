"""Arbitrary-precision natural-number primitives.

Everything operates on plain Python ints restricted to non-negative
values; callers get a ValueError rather than a silently wrong answer
when a negative or otherwise out-of-domain value slips in. All results
are exact: no floating point anywhere.
"""

import math


def _check_nat(value, name):
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")


def modpow(base, exponent, modulus):
    """base**exponent mod modulus, reduced into [0, modulus)."""
    _check_nat(base, "base")
    _check_nat(exponent, "exponent")
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    return pow(base, exponent, modulus)


def isqrt(n):
    """floor(sqrt(n)); the result r satisfies r*r <= n < (r+1)*(r+1)."""
    _check_nat(n, "n")
    return math.isqrt(n)


def gcd(a, b):
    """Greatest common divisor; gcd(0, 0) == 0 by convention."""
    _check_nat(a, "a")
    _check_nat(b, "b")
    return math.gcd(a, b)


def digit_count(n):
    """Number of base-10 digits of n >= 1, read off the decimal string."""
    if n < 1:
        raise ValueError(f"digit_count requires n >= 1, got {n}")
    return len(str(n))


def divisors(n):
    """All divisors of n >= 1 in ascending order, by trial division."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
