"""Prime generation and deterministic primality testing.

A single module-level sieve cache backs everything. It grows on demand
(doubling until sufficient) and is rebuilt as a fresh list under a lock,
so concurrent readers only ever see complete tables. Primality is decided
by trial division against sieve primes up to the square root: everything
in scope is small enough that no probabilistic test is needed.
"""

import bisect
import threading
from dataclasses import dataclass

from .kernel import isqrt


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, strictly increasing."""

    limit: int
    primes: tuple

    @property
    def count(self):
        return len(self.primes)

    def __contains__(self, n):
        i = bisect.bisect_left(self.primes, n)
        return i < len(self.primes) and self.primes[i] == n


def _sieve_list(limit):
    """Sieve of Eratosthenes: list of all primes <= limit."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


_lock = threading.RLock()
_cached_limit = 0
_cached_primes = []


def primes_up_to(limit):
    """All primes <= limit, served from the shared doubling cache."""
    global _cached_limit, _cached_primes
    if limit < 2:
        return []
    with _lock:
        if limit > _cached_limit:
            target = max(limit, 2 * _cached_limit, 1 << 10)
            _cached_primes = _sieve_list(target)
            _cached_limit = target
        hi = bisect.bisect_right(_cached_primes, limit)
        return _cached_primes[:hi]


def sieve(limit):
    """Build a PrimeTable of all primes <= limit (limit >= 2)."""
    if limit < 2:
        raise ValueError(f"sieve requires limit >= 2, got {limit}")
    return PrimeTable(limit, tuple(primes_up_to(limit)))


def is_prime(n):
    """True iff n is prime, by trial division up to isqrt(n)."""
    if n < 2:
        return False
    for p in primes_up_to(isqrt(n)):
        if n % p == 0:
            return False
    return True


def primes_in_classes(limit, classes):
    """Primes p <= limit with p mod classes.modulus in classes.residues."""
    if not classes.residues:
        raise ValueError("candidate class has an empty residue set")
    modulus = classes.modulus
    residues = set(classes.residues)
    return [p for p in primes_up_to(limit) if p % modulus in residues]
