"""Residue classes that confine the possible prime divisors of 2**q - 1.

For an odd prime exponent q every prime divisor is 1 mod 2q; for
composite q the same holds mod q (mod 2q when q is odd) for primes not
already accounted for by smaller exponents. The quadratic-character
refinement intersects with +-1 mod 8 and halves the candidate density.
"""

from dataclasses import dataclass

from .kernel import modpow
from .primes import is_prime


@dataclass(frozen=True)
class CandidateClass:
    """Admissible residues mod ``modulus`` for prime divisors of 2**q - 1."""

    modulus: int
    residues: frozenset
    target_exponent: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not self.residues:
            raise ValueError("residue set must be non-empty")
        if any(not 0 <= r < self.modulus for r in self.residues):
            raise ValueError("every residue must lie in [0, modulus)")


def _check_odd_prime(q, who):
    if q == 2 or not is_prime(q):
        raise ValueError(f"{who} requires an odd prime, got {q}")


def third_proposition_class(q):
    """Divisors of 2**q - 1 (q an odd prime) are 1 mod 2q."""
    _check_odd_prime(q, "third_proposition_class")
    return CandidateClass(2 * q, frozenset({1}), q)


def generalized_class(q):
    """Primitive prime divisors of 2**q - 1 are 1 mod q (mod 2q for odd q).

    Applies to primes not dividing 2**d - 1 for any proper divisor d of
    q; discharging that hypothesis is the factoring pipeline's job.
    """
    if q < 2:
        raise ValueError(f"generalized_class requires q >= 2, got {q}")
    modulus = 2 * q if q % 2 == 1 else q
    return CandidateClass(modulus, frozenset({1}), q)


def qr2(q):
    """Whether 2 is a quadratic residue mod the odd prime q.

    Euler's criterion: 2**((q-1)/2) == 1 mod q. Equivalent to
    q mod 8 in {1, 7}.
    """
    _check_odd_prime(q, "qr2")
    return modpow(2, (q - 1) // 2, q) == 1


def euler_refined_class(q):
    """Intersect 1 mod 2q with +-1 mod 8: two residues mod 8q.

    Found by scanning [1, 8q); the moduli involved are tiny, so the
    scan doubles as its own correctness argument.
    """
    _check_odd_prime(q, "euler_refined_class")
    two_q = 2 * q
    residues = frozenset(
        r for r in range(1, 8 * q) if r % two_q == 1 and r % 8 in (1, 7)
    )
    return CandidateClass(8 * q, residues, q)


def sophie_germain_divisor(p):
    """2p + 1 when it is prime and p == 3 mod 4 (then it divides 2**p - 1).

    Returns None when the criterion does not apply. The divisibility is
    re-verified before the divisor is handed back.
    """
    if not is_prime(p):
        raise ValueError(f"sophie_germain_divisor requires a prime, got {p}")
    if p % 4 != 3:
        return None
    q = 2 * p + 1
    if not is_prime(q):
        return None
    if modpow(2, p, q) != 1:
        raise AssertionError(f"criterion failed for p={p}: {q} does not divide")
    return q
