"""Perfect numbers: aliquot sums, Euclid's construction, challenge scans.

Aliquot questions reduce to prime questions: the aliquot sum comes from
the factorization via the multiplicative sigma formula, and even perfect
numbers are enumerated through Euclid's pairing with Mersenne primes.
"""

from dataclasses import dataclass

from .factoring import COMPLETE, factor_mersenne, factor_nat
from .kernel import digit_count
from .primes import is_prime, primes_up_to

MERSENNE_PRIME = "mersenne-prime"
IMPOSTER = "imposter"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class PerfectRecord:
    exponent: int
    mersenne_prime: int
    perfect_number: int
    digits: int


@dataclass(frozen=True)
class ExponentVerdict:
    exponent: int
    verdict: str  # MERSENNE_PRIME, IMPOSTER or UNRESOLVED
    witness: int = None  # smallest known factor, for imposters
    digits: int = None  # digits of the paired perfect number, for primes


@dataclass(frozen=True)
class ChallengeReport:
    min_digits: int
    examined: tuple  # ExponentVerdict per prime exponent, ascending
    outcome: PerfectRecord = None


def aliquot_sum(n):
    """Sum of the proper divisors of n >= 1, via the sigma formula."""
    if n < 1:
        raise ValueError(f"aliquot_sum requires n >= 1, got {n}")
    if n == 1:
        return 0
    sigma = 1
    for p, e in factor_nat(n).factors:
        sigma *= (p ** (e + 1) - 1) // (p - 1)
    return sigma - n


def is_perfect(n):
    """Whether n equals the sum of its proper divisors."""
    return aliquot_sum(n) == n


def euclid_perfect(n):
    """PerfectRecord for exponent n when 2**n - 1 is prime, else None."""
    if n < 2:
        raise ValueError(f"euclid_perfect requires n >= 2, got {n}")
    m = (1 << n) - 1
    if not is_prime(m):
        return None
    perfect = m << (n - 1)
    return PerfectRecord(n, m, perfect, digit_count(perfect))


def enumerate_even_perfect(limit):
    """All even perfect numbers <= limit, via Euclid's construction."""
    found = []
    n = 2
    while True:
        perfect = ((1 << n) - 1) << (n - 1)
        if perfect > limit:
            break
        if is_prime((1 << n) - 1):
            found.append(perfect)
        n += 1
    return found


def frenicle_scan(min_digits, max_exponent, budget=None):
    """Scan prime exponents for a perfect number with >= min_digits digits.

    Each prime p <= max_exponent is classified by factoring 2**p - 1:
    mersenne-prime (records the paired perfect number's digit count),
    imposter (records the smallest witness factor), or unresolved when a
    budget-capped scan found nothing either way.
    """
    if min_digits < 1:
        raise ValueError(f"min_digits must be >= 1, got {min_digits}")
    if max_exponent < 2:
        raise ValueError(f"max_exponent must be >= 2, got {max_exponent}")
    examined = []
    outcome = None
    for p in primes_up_to(max_exponent):
        fact, _trace = factor_mersenne(p, budget)
        m = (1 << p) - 1
        if fact.status == COMPLETE and fact.factors == ((m, 1),):
            perfect = m << (p - 1)
            digits = digit_count(perfect)
            examined.append(ExponentVerdict(p, MERSENNE_PRIME, digits=digits))
            if outcome is None and digits >= min_digits:
                outcome = PerfectRecord(p, m, perfect, digits)
        elif fact.factors:
            examined.append(ExponentVerdict(p, IMPOSTER, witness=fact.factors[0][0]))
        else:
            examined.append(ExponentVerdict(p, UNRESOLVED))
    return ChallengeReport(min_digits, tuple(examined), outcome)
