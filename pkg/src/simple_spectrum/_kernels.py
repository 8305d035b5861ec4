"""Hot integer kernels: prime sieve and the multiplicative-order table.

Each kernel has a numba ``@njit`` implementation and a pure-numpy fallback.
The fallback is selected when numba is missing or when the environment sets
``SIMPLE_SPECTRUM_NUMBA=0``.  Both paths are bit-exact; the benchmark in
``benchmarks/bench_kernels.py`` compares them.

The order table works in int64, so moduli must stay below ``MAX_KERNEL_MODULUS``
(products of two residues must fit in 63 bits).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

MAX_KERNEL_MODULUS = 1 << 31

USE_NUMBA = numba is not None and os.environ.get("SIMPLE_SPECTRUM_NUMBA", "1") != "0"


# ---------------------------------------------------------------------------
# numpy fallbacks

def _sieve_numpy(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=np.bool_)
    flags[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return np.flatnonzero(flags).astype(np.int64)


def _prime_divisors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _powmod_vec(base: np.ndarray, exp: np.ndarray, mod: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % mod
    e = exp.copy()
    while np.any(e):
        odd = (e & 1).astype(np.bool_)
        result[odd] = (result[odd] * b[odd]) % mod
        b = (b * b) % mod
        e >>= 1
    return result


def _order_table_numpy(bases: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    out = np.zeros((bases.size, moduli.size), dtype=np.int64)
    if moduli.size == 0 or bases.size == 0:
        return out
    for j, r in enumerate(moduli.tolist()):
        if r == 2:
            out[:, j] = np.where(bases % 2 == 0, 0, 1)
            continue
        units = bases % r != 0
        idx = np.flatnonzero(units)
        order = np.full(idx.size, r - 1, dtype=np.int64)
        b = bases[idx]
        for s in _prime_divisors(r - 1):
            while True:
                cand = np.flatnonzero(order % s == 0)
                if cand.size == 0:
                    break
                hit = _powmod_vec(b[cand], order[cand] // s, r) == 1
                if not hit.any():
                    break
                order[cand[hit]] //= s
        out[idx, j] = order
    return out


# ---------------------------------------------------------------------------
# numba kernels

if numba is not None:

    @numba.njit(cache=True)
    def _sieve_numba(limit):
        if limit < 2:
            return np.zeros(0, dtype=np.int64)
        flags = np.ones(limit + 1, dtype=np.bool_)
        flags[0] = False
        flags[1] = False
        i = 2
        while i * i <= limit:
            if flags[i]:
                for j in range(i * i, limit + 1, i):
                    flags[j] = False
            i += 1
        count = 0
        for i in range(limit + 1):
            if flags[i]:
                count += 1
        out = np.empty(count, dtype=np.int64)
        c = 0
        for i in range(limit + 1):
            if flags[i]:
                out[c] = i
                c += 1
        return out

    @numba.njit(cache=True)
    def _powmod(b, e, m):
        result = 1
        b %= m
        while e > 0:
            if e & 1:
                result = (result * b) % m
            b = (b * b) % m
            e >>= 1
        return result

    @numba.njit(cache=True)
    def _order_table_numba(bases, moduli):
        out = np.zeros((bases.size, moduli.size), dtype=np.int64)
        if moduli.size == 0:
            return out
        divs = np.zeros(64, dtype=np.int64)
        for j in range(moduli.size):
            r = moduli[j]
            nd = 0
            # prime divisors of r - 1 by trial division
            m = r - 1
            d = 2
            while d * d <= m:
                if m % d == 0:
                    divs[nd] = d
                    nd += 1
                    while m % d == 0:
                        m //= d
                d += 1 if d == 2 else 2
            if m > 1:
                divs[nd] = m
                nd += 1
            for i in range(bases.size):
                b = bases[i] % r
                if b == 0:
                    continue
                order = r - 1
                for t in range(nd):
                    s = divs[t]
                    while order % s == 0 and _powmod(b, order // s, r) == 1:
                        order //= s
                out[i, j] = order
        return out


def sieve(limit: int, use_numba: bool | None = None) -> np.ndarray:
    """All primes <= ``limit`` as an int64 array."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba:
        return _sieve_numba(int(limit))
    return _sieve_numpy(int(limit))


def order_table(bases, moduli, use_numba: bool | None = None) -> np.ndarray:
    """``out[i, j]`` = multiplicative order of ``bases[i]`` modulo prime ``moduli[j]``.

    Entries where the modulus divides the base are 0.
    """
    bases = np.asarray(bases, dtype=np.int64)
    moduli = np.asarray(moduli, dtype=np.int64)
    if moduli.size and int(moduli.max()) >= MAX_KERNEL_MODULUS:
        raise ValueError("modulus too large for the int64 order kernel")
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba:
        return _order_table_numba(bases, moduli)
    return _order_table_numpy(bases, moduli)
