"""Per-characteristic factor tables built from cyclotomic values.

For q = p**k every order term ``q**d +/- 1`` is a product of cyclotomic
values ``Phi_e(p)``.  A prime r divides ``Phi_e(p)`` only when e is the order
of p modulo r, or when r divides e.  By Zsigmondy's theorem, for e outside
{1, 2, 6} the value ``Phi_e(p)`` has a prime divisor r of order exactly e.
So ``Phi_e(p)`` can only be smooth over ``pi`` if some r in ``pi`` has
``ord_r(p) == e``.  Each ``Phi_e(p)`` is factored at most once per
characteristic, and whole order terms become multiset unions of these.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Mapping

from .groups import GroupId, Term
from .primes import PrimeSet, constrained_factor


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    ds = [1]
    for p, e in _factor(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return tuple(sorted(ds))


def euler_phi(n: int) -> int:
    out = n
    for p, _ in _factor(n):
        out -= out // p
    return out


def mobius(n: int) -> int:
    fac = _factor(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def cyclotomic_value(e: int, x: int) -> int:
    """``Phi_e(x)`` for an integer ``x >= 2``."""
    num = den = 1
    for d in divisors(e):
        mu = mobius(e // d)
        if mu == 1:
            num *= x**d - 1
        elif mu == -1:
            den *= x**d - 1
    quo, rem = divmod(num, den)
    assert rem == 0
    return quo


def cyclotomic_indices(term: Term, k: int) -> list[int]:
    """Indices e with ``term(p**k) == prod Phi_e(p)`` (as a set, each once)."""

    def base(d: int, sign: int) -> set[int]:
        if sign < 0:
            return set(divisors(k * d))
        return set(divisors(2 * k * d)) - set(divisors(k * d))

    es = base(term.d, term.sign)
    if term.div:
        es -= base(term.div, term.sign)
    return sorted(es)


def _valuation_of_power_minus_one(p: int, e: int, r: int) -> int:
    v, m = 0, r
    while pow(p, e, m) == 1:
        v += 1
        m *= r
    return v


class CyclotomicTable:
    """Smooth factorizations of ``Phi_e(p)`` over ``pi`` for one prime ``p``.

    ``orders`` maps each prime ``r`` of ``pi`` other than ``p`` to the
    multiplicative order of ``p`` modulo ``r``.
    """

    def __init__(self, p: int, pi: PrimeSet, orders: Mapping[int, int]):
        self.p = p
        self.pi = pi
        self.by_order: dict[int, list[int]] = {}
        for r, o in orders.items():
            self.by_order.setdefault(o, []).append(r)
        self._phi: dict[int, dict[int, int] | None] = {}
        self._terms: dict[tuple, dict[int, int] | None] = {}

    def phi(self, e: int) -> dict[int, int] | None:
        if e in self._phi:
            return self._phi[e]
        res = self._compute_phi(e)
        self._phi[e] = res
        return res

    def _compute_phi(self, e: int) -> dict[int, int] | None:
        p = self.p
        if e in (1, 2, 6):
            fo = constrained_factor(cyclotomic_value(e, p), self.pi)
            return dict(fo.factors) if fo.smooth else None
        primitive = self.by_order.get(e)
        if not primitive:
            return None
        cands = list(primitive) + [r for r, _ in _factor(e) if r in self.pi and r != p]
        if p > 2:
            # cheap rejection: Phi_e(p) >= (p-1)**phi(e), and the valuations
            # below bound what the candidate primes can contribute
            budget = sum(_valuation_of_power_minus_one(p, e, r) * math.log(r) for r in cands)
            if budget < euler_phi(e) * math.log(p - 1) * (1 - 1e-9) - 1e-6:
                return None
        n = cyclotomic_value(e, p)
        out: dict[int, int] = {}
        for r in cands:
            if n % r == 0:
                v = 0
                while n % r == 0:
                    n //= r
                    v += 1
                out[r] = v
        return dict(sorted(out.items())) if n == 1 else None

    def smooth_upto_divisors(self, m: int) -> bool:
        """True when ``p**m - 1`` is smooth over ``pi``."""
        return all(self.phi(e) is not None for e in divisors(m))

    def field_exponents(self, limit: int) -> list[int]:
        """Exponents ``k <= limit`` with ``p**k - 1`` smooth; others admit no group."""
        cands = sorted({1, 2, 6} | set(self.by_order))
        return [k for k in cands if k <= limit and self.smooth_upto_divisors(k)]

    def term(self, term: Term, k: int) -> dict[int, int] | None:
        key = (term.d, term.sign, term.div, k)
        if key in self._terms:
            return self._terms[key]
        acc: dict[int, int] | None = {}
        for e in cyclotomic_indices(term, k):
            f = self.phi(e)
            if f is None:
                acc = None
                break
            for r, v in f.items():
                acc[r] = acc.get(r, 0) + v
        self._terms[key] = acc
        return acc

    def factorizer(self):
        def factor_term(term: Term, gid: GroupId):
            return self.term(term, gid.k)

        return factor_term
