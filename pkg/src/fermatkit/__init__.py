"""Computational toolkit for Mersenne numbers and perfect numbers.

Implements the classical 1640-era machinery: multiplicative orders and
the power-residue theorem, divisor propagation between Mersenne numbers,
residue-class restrictions on candidate divisors, restricted trial
factoring, Euclid's perfect-number construction, and replays of the
historical computations with embedded expected values.
"""

from .factoring import (
    Factorization,
    FactorTrace,
    TraceStep,
    factor_mersenne,
    factor_nat,
    verify,
)
from .forms import (
    CandidateClass,
    euler_refined_class,
    generalized_class,
    qr2,
    sophie_germain_divisor,
    third_proposition_class,
)
from .kernel import digit_count, divisors, gcd, isqrt, modpow
from .mersenne import (
    MersenneNumber,
    OrderRecord,
    divisibility_conjecture_check,
    exponent_progression,
    first_proposition_witness,
    flt_check,
    mersenne,
    order,
    second_proposition_check,
)
from .perfect import (
    ChallengeReport,
    ExponentVerdict,
    PerfectRecord,
    aliquot_sum,
    enumerate_even_perfect,
    euclid_perfect,
    frenicle_scan,
    is_perfect,
)
from .primes import PrimeTable, is_prime, primes_in_classes, primes_up_to, sieve
from .replay import (
    ReplayItem,
    ReplayReport,
    format_factorization,
    replay_all,
    replay_m23_to_m36,
    replay_m31,
    replay_m37,
    replay_table1,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
