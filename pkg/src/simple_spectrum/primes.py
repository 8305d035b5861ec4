"""Primality, prime sets, multiplicative orders and factorization over a prime set."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from . import _kernels


class DomainError(ValueError):
    """An argument lies outside the domain of an arithmetic operation."""


class EmptyUniverseError(DomainError):
    pass


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the bases above is deterministic below this bound.
_MR_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < 3.3e24``."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    if n >= _MR_LIMIT:
        raise DomainError(f"primality of {n} is outside the deterministic range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    m = max(n + 1, 2)
    while not is_prime(m):
        m += 1
    return m


@dataclass(frozen=True)
class PrimeSet:
    """An immutable, strictly increasing set of primes."""

    primes: tuple[int, ...]
    index: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        primes = tuple(int(p) for p in self.primes)
        for i, p in enumerate(primes):
            if not is_prime(p):
                raise DomainError(f"{p} is not prime (position {i})")
            if i and p <= primes[i - 1]:
                raise DomainError("primes must be strictly increasing")
        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "index", frozenset(primes))

    @classmethod
    def of(cls, values: Iterable[int]) -> "PrimeSet":
        """Build from any iterable, sorting and dropping duplicates."""
        return cls(tuple(sorted(set(int(v) for v in values))))

    @property
    def max_prime(self) -> int:
        if not self.primes:
            raise EmptyUniverseError("empty prime set")
        return self.primes[-1]

    def __contains__(self, p) -> bool:
        return p in self.index

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def is_initial_segment(self) -> bool:
        """True when the set holds every prime up to its maximum."""
        return bool(self.primes) and self.primes == tuple(int(x) for x in _kernels.sieve(self.max_prime))


@dataclass(frozen=True)
class FactoredOrder:
    """Prime -> exponent map for the part of an integer supported on a prime set.

    ``leftover`` is the cofactor not divisible by any prime of the set;
    it is 1 exactly when the integer is smooth over the set.
    """

    factors: Mapping[int, int]
    leftover: int = 1

    @property
    def smooth(self) -> bool:
        return self.leftover == 1

    def value(self) -> int:
        n = self.leftover
        for p, e in self.factors.items():
            n *= p**e
        return n


def sieve_primes(limit: int) -> PrimeSet:
    """All primes ``<= limit``."""
    if limit < 2:
        raise EmptyUniverseError(f"no primes below {limit}")
    return PrimeSet(tuple(int(p) for p in _kernels.sieve(int(limit))))


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in _kernels.sieve(10**6))


def _factor_small(n: int) -> dict[int, int] | None:
    """Factor ``n`` when at most one prime factor exceeds 10**6, else None."""
    out: dict[int, int] = {}
    for s in _small_primes():
        if s * s > n:
            break
        if n % s == 0:
            e = 0
            while n % s == 0:
                n //= s
                e += 1
            out[s] = e
    else:
        if n > 1 and not is_prime(n):
            return None
    if n > 1:
        out[n] = 1
    return out


def multiplicative_order(p: int, r: int) -> int:
    """Smallest ``k >= 1`` with ``p**k == 1 (mod r)`` for a prime ``r`` not dividing ``p``."""
    if r == p or p % r == 0:
        raise DomainError(f"{r} divides {p}")
    if r == 2:
        return 1
    p %= r
    fac = _factor_small(r - 1)
    if fac is None:
        k, x = 1, p
        while x != 1:
            x = x * p % r
            k += 1
        return k
    order = r - 1
    for s in fac:
        while order % s == 0 and pow(p, order // s, r) == 1:
            order //= s
    return order


def t_bound(p: int, pi: PrimeSet) -> int:
    """Largest multiplicative order of ``p`` modulo the other primes of ``pi``; 0 if none."""
    if p not in pi:
        raise DomainError(f"{p} is not in the prime set")
    return max((multiplicative_order(p, r) for r in pi if r != p), default=0)


def constrained_factor(n: int, pi: PrimeSet) -> FactoredOrder:
    """Divide out every prime of ``pi`` from ``n`` to full multiplicity."""
    if n < 1:
        raise DomainError("n must be positive")
    factors: dict[int, int] = {}
    for r in pi.primes:
        if r > n:
            break
        if n < r * r:
            # every prime of pi below r is gone, so n is 1, a prime, or has a factor outside pi
            if n in pi.index:
                factors[n] = factors.get(n, 0) + 1
                n = 1
            break
        if n % r == 0:
            e = 0
            while n % r == 0:
                n //= r
                e += 1
            factors[r] = e
    return FactoredOrder(dict(sorted(factors.items())), n)
