"""Enumerate the non-abelian finite simple groups whose order is smooth over a set of primes."""

from .primes import (
    DomainError,
    EmptyUniverseError,
    FactoredOrder,
    PrimeSet,
    constrained_factor,
    is_prime,
    multiplicative_order,
    next_prime,
    sieve_primes,
    t_bound,
)
from .groups import (
    Family,
    GroupId,
    GroupRecord,
    canonical_name,
    group_order,
    is_admissible,
    parse_name,
    spectrum,
)

__version__ = "0.1.0"
