"""Factoring 2**n - 1 by divisor propagation plus restricted trial division.

The pipeline mirrors the 1640 method: primes of 2**d - 1 for proper
divisors d of n are divided out first (to full multiplicity), then the
remaining cofactor is attacked only with prime candidates from its
admissible residue class, in increasing order. A cofactor that survives
all candidates up to its square root is prime. ``factor_nat`` is the
independent plain-trial-division oracle.
"""

import threading
from dataclasses import dataclass

from .forms import euler_refined_class, generalized_class
from .kernel import divisors, isqrt
from .primes import is_prime, primes_up_to

COMPLETE = "complete"
PARTIAL = "partial"

PROPAGATED = "propagated"
CANDIDATE_MISS = "candidate-miss"
CANDIDATE_HIT = "candidate-hit"
COFACTOR_PRIME = "cofactor-prime"
BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple  # ((prime, multiplicity), ...) ascending
    status: str  # COMPLETE or PARTIAL
    unresolved_cofactor: int = 1

    def prime_multiset(self):
        """Primes with repetition, ascending."""
        return [p for p, e in self.factors for _ in range(e)]


@dataclass(frozen=True)
class TraceStep:
    """One pipeline event.

    value is the prime divided out, the candidate tried, or the scan
    bound; source is the exponent d a propagated prime came from.
    """

    rule: str
    value: int
    source: int = None
    multiplicity: int = 0


@dataclass(frozen=True)
class FactorTrace:
    steps: tuple

    def candidates_tried(self):
        return [
            s.value
            for s in self.steps
            if s.rule in (CANDIDATE_MISS, CANDIDATE_HIT)
        ]

    def hits(self):
        return [s.value for s in self.steps if s.rule == CANDIDATE_HIT]


def factor_nat(n):
    """Complete factorization of n >= 2 by plain trial division."""
    if n < 2:
        raise ValueError(f"factor_nat requires n >= 2, got {n}")
    m = n
    factors = []
    for p in primes_up_to(isqrt(n)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors), COMPLETE)


_memo = {}
_memo_lock = threading.Lock()


def clear_cache():
    """Drop memoized factorizations (test isolation hook)."""
    with _memo_lock:
        _memo.clear()


def _prime_candidates(cls):
    """Prime candidates in the class, strictly increasing, unbounded."""
    residues = sorted(cls.residues)
    k = 0
    while True:
        for r in residues:
            c = k * cls.modulus + r
            if c >= 2 and is_prime(c):
                yield c
        k += 1


def factor_mersenne(n, budget=None, refined=True):
    """Factor 2**n - 1; returns (Factorization, FactorTrace).

    budget caps the largest candidate value tried in the restricted
    scan (default: the square root of the running cofactor, i.e. run to
    completion). refined selects the quadratic-character classes for odd
    prime n; the plain 1-mod-2n class is used otherwise.
    """
    if n < 2:
        raise ValueError(f"factor_mersenne requires n >= 2, got {n}")
    key = (n, refined)
    if budget is None:
        with _memo_lock:
            if key in _memo:
                return _memo[key]
    elif budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    result = _factor_mersenne_uncached(n, budget, refined)
    if budget is None:
        with _memo_lock:
            _memo.setdefault(key, result)
    return result


def _factor_mersenne_uncached(n, budget, refined):
    value = (1 << n) - 1
    cofactor = value
    steps = []
    counts = {}

    # Inherited primes: every prime of 2**d - 1 for proper d | n divides
    # 2**n - 1. Keep the smallest d each prime came from.
    inherited = {}
    for d in divisors(n):
        if d == 1 or d == n:
            continue
        sub, _ = factor_mersenne(d, None, refined)
        for p, _e in sub.factors:
            inherited.setdefault(p, d)
    for p in sorted(inherited):
        e = 0
        while cofactor % p == 0:
            cofactor //= p
            e += 1
        counts[p] = e
        steps.append(TraceStep(PROPAGATED, p, source=inherited[p], multiplicity=e))

    status = COMPLETE
    if cofactor > 1:
        if refined and n % 2 == 1 and is_prime(n):
            cls = euler_refined_class(n)
        else:
            cls = generalized_class(n)
        for c in _prime_candidates(cls):
            limit = isqrt(cofactor)
            if c > limit:
                # Every prime divisor of the primitive cofactor lies in
                # the class, so an exhausted scan proves primality.
                counts[cofactor] = 1
                steps.append(TraceStep(COFACTOR_PRIME, cofactor, multiplicity=1))
                cofactor = 1
                break
            if budget is not None and c > budget:
                status = PARTIAL
                steps.append(TraceStep(BUDGET_EXHAUSTED, budget))
                break
            if cofactor % c == 0:
                e = 0
                while cofactor % c == 0:
                    cofactor //= c
                    e += 1
                counts[c] = e
                steps.append(TraceStep(CANDIDATE_HIT, c, multiplicity=e))
                if cofactor == 1:
                    break
            else:
                steps.append(TraceStep(CANDIDATE_MISS, c))

    factors = tuple(sorted((p, e) for p, e in counts.items()))
    fact = Factorization(value, factors, status, cofactor if status == PARTIAL else 1)
    return fact, FactorTrace(tuple(steps))


def verify(f):
    """Recheck a Factorization: product, factor primality, status flags."""
    product = f.unresolved_cofactor
    for p, e in f.factors:
        if e < 1 or not is_prime(p):
            return False
        product *= p**e
    if product != f.value:
        return False
    if list(f.factors) != sorted(f.factors):
        return False
    if f.status == COMPLETE:
        return f.unresolved_cofactor == 1
    if f.status == PARTIAL:
        return f.unresolved_cofactor > 1
    return False
