import math
import random

import pytest

from simple_spectrum.primes import (
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


def naive_primes(n):
    return [m for m in range(2, n + 1) if all(m % d for d in range(2, math.isqrt(m) + 1))]


def naive_order(p, r):
    x, e = p % r, 1
    while x != 1:
        x, e = x * p % r, e + 1
    return e


def test_sieve_matches_trial_division():
    assert sieve_primes(20000).primes == tuple(naive_primes(20000))


def test_sieve_counts():
    # prime counting function at powers of ten
    assert len(sieve_primes(10**5)) == 9592
    assert len(sieve_primes(10000)) == 1229
    assert sieve_primes(2).primes == (2,)


def test_sieve_rejects_empty_universe():
    with pytest.raises(EmptyUniverseError):
        sieve_primes(1)


def test_is_prime_agrees_with_sieve():
    ps = set(sieve_primes(50000))
    assert all(is_prime(n) == (n in ps) for n in range(-3, 50001))


@pytest.mark.parametrize("n", [2**61 - 1, 2**31 - 1, 1000000007, 13421, 3317044064679887385961813])
def test_is_prime_large_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [2**67 - 1, 3215031751, 3825123056546413051, 561 * 1105])
def test_is_prime_large_composites(n):
    # includes strong pseudoprimes to several small bases
    assert not is_prime(n)


def test_is_prime_refuses_beyond_deterministic_range():
    with pytest.raises(DomainError):
        is_prime(2**127 - 1)


def test_next_prime():
    assert [next_prime(n) for n in (1, 2, 3, 13, 8191, 9973)] == [2, 3, 5, 17, 8209, 10007]


def test_primeset_validation():
    with pytest.raises(DomainError, match="4 is not prime"):
        PrimeSet((2, 3, 4))
    with pytest.raises(DomainError):
        PrimeSet((3, 2))
    with pytest.raises(EmptyUniverseError):
        PrimeSet(()).max_prime
    s = PrimeSet.of([5, 2, 3, 3])
    assert s.primes == (2, 3, 5) and 3 in s and 7 not in s and s.max_prime == 5
    assert s.is_initial_segment() and not PrimeSet.of([2, 5]).is_initial_segment()


def test_multiplicative_order_brute_force():
    ps = naive_primes(400)
    for r in ps:
        for p in ps:
            if p != r:
                assert multiplicative_order(p, r) == naive_order(p, r), (p, r)


def test_multiplicative_order_known():
    assert multiplicative_order(2, 8191) == 13
    assert multiplicative_order(11, 13421) == 10
    assert multiplicative_order(10, 9973) == naive_order(10, 9973)
    with pytest.raises(DomainError):
        multiplicative_order(7, 7)


def test_t_bound():
    pi = PrimeSet((2, 3, 5))
    assert (t_bound(2, pi), t_bound(3, pi), t_bound(5, pi)) == (4, 4, 2)
    assert t_bound(7, PrimeSet((7,))) == 0
    pi = PrimeSet((2, 3, 5, 11, 37, 61, 13421))
    for p in pi:
        assert t_bound(p, pi) == max(naive_order(p, r) for r in pi if r != p)


def test_constrained_factor_round_trip():
    rng = random.Random(20240611)
    small = naive_primes(300)
    for _ in range(10_000):
        pi = PrimeSet.of(rng.sample(small, rng.randint(1, 12)))
        n = rng.randint(1, 10**12) if rng.random() < 0.5 else math.prod(
            rng.choice(pi.primes) ** rng.randint(1, 6) for _ in range(rng.randint(1, 5))
        ) * rng.choice([1, 1, 1, 7919, 104729, 2**31 - 1])
        fo = constrained_factor(n, pi)
        assert fo.value() == n
        assert all(r in pi for r in fo.factors)
        # smooth exactly when every prime divisor is in pi
        rest = n
        for r in pi:
            while rest % r == 0:
                rest //= r
        assert fo.smooth == (rest == 1)
        assert fo.leftover == rest


def test_constrained_factor_edge_cases():
    pi = PrimeSet((2, 3))
    assert constrained_factor(1, pi) == FactoredOrder({})
    assert constrained_factor(2**40 * 3**5, pi).factors == {2: 40, 3: 5}
    assert not constrained_factor(10, pi).smooth
    with pytest.raises(DomainError):
        constrained_factor(0, pi)
