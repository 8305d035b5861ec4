"""Candidate generation and the parallel enumeration driver.

Every simple group whose spectrum lies in ``pi`` is sporadic (or the Tits
group), an alternating group ``A_n`` with ``n < p0`` where ``p0`` is the
least prime above ``pi``, or a group of Lie type over ``GF(p**k)``.  For Lie
type, ``p`` is in ``pi``, ``k <= t_p`` and the ambient untwisted rank is at
most ``max(8, t_p)``.  Here ``t_p`` is the largest multiplicative order of
``p`` modulo the other primes of ``pi``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .cyclotomic import CyclotomicTable
from .groups import (
    FIXED_RANK,
    LIE_FAMILIES,
    SPECS,
    SPORADIC_ORDERS,
    TITS,
    GroupId,
    GroupRecord,
    alternating,
    direct_term_factorizer,
    is_admissible,
    lie_factors,
    make_record,
    order_factors,
    sporadic,
)
from .primes import PrimeSet, multiplicative_order, next_prime

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharBounds:
    p: int
    t: int
    rank_max: int
    k_max: int


@dataclass(frozen=True)
class CandidateBounds:
    pi: PrimeSet
    p0: int
    alt_max: int
    chars: tuple[CharBounds, ...]
    k_margin: int = 1
    rank_margin: int = 1


@dataclass(frozen=True)
class WorkUnit:
    """All ranks of one family over one field ``GF(p**k)``."""

    family: object
    p: int
    k: int


def order_rows(pi: PrimeSet) -> dict[int, dict[int, int]]:
    """``rows[p][r]`` = order of ``p`` modulo ``r`` for distinct ``p, r`` in ``pi``."""
    primes = list(pi.primes)
    if primes and primes[-1] < _kernels.MAX_KERNEL_MODULUS:
        arr = np.asarray(primes, dtype=np.int64)
        table = _kernels.order_table(arr, arr)
        return {
            p: {r: int(table[i, j]) for j, r in enumerate(primes) if j != i}
            for i, p in enumerate(primes)
        }
    return {p: {r: multiplicative_order(p, r) for r in primes if r != p} for p in primes}


def compute_bounds(pi: PrimeSet, k_margin: int = 1, rank_margin: int = 1, rows=None) -> CandidateBounds:
    if k_margin < 1 or rank_margin < 1:
        raise ValueError("margins must be positive")
    rows = order_rows(pi) if rows is None else rows
    p0 = next_prime(pi.max_prime)
    chars = []
    for p in pi.primes:
        t = max(rows[p].values(), default=0)
        chars.append(CharBounds(p, t, max(8, t) * rank_margin, t * k_margin))
    return CandidateBounds(pi, p0, p0 - 1, tuple(chars), k_margin, rank_margin)


def fixed_candidates() -> list[GroupId]:
    return [sporadic(name) for name in SPORADIC_ORDERS] + [TITS]


def _family_ranks(family, rank_max: int) -> range:
    spec = SPECS[family]
    if family in FIXED_RANK:
        return range(spec.min_rank, min(spec.min_rank, rank_max) + 1)
    return range(spec.min_rank, rank_max + 1)


def work_units(cb: CharBounds) -> Iterator[WorkUnit]:
    for k in range(1, cb.k_max + 1):
        for family in LIE_FAMILIES:
            spec = SPECS[family]
            if spec.char and spec.char != cb.p:
                continue
            if spec.odd_k and k % 2 == 0:
                continue
            yield WorkUnit(family, cb.p, k)


def _unit_ids(unit: WorkUnit, rank_max: int) -> Iterator[GroupId]:
    spec = SPECS[unit.family]
    for rank in _family_ranks(unit.family, rank_max):
        gid = GroupId(unit.family, spec.subscript(rank), unit.p, unit.k)
        if is_admissible(gid):
            yield gid


def candidate_stream(bounds: CandidateBounds) -> Iterator[GroupId]:
    """Every admissible candidate, without any pruning, in a fixed order."""
    yield from fixed_candidates()
    for n in range(5, bounds.alt_max + 1):
        yield alternating(n)
    for cb in bounds.chars:
        for unit in work_units(cb):
            yield from _unit_ids(unit, cb.rank_max)


def scan_unit(unit: WorkUnit, rank_max: int, factor_term, early_exit: bool = True) -> list[GroupRecord]:
    """Evaluate the ranks of one work unit in increasing order.

    With ``early_exit`` the scan stops at the first rank rejected by a term
    that recurs in every higher rank, since all later ranks fail on it too.
    """
    out = []
    for gid in _unit_ids(unit, rank_max):
        facs, failed = lie_factors(gid, factor_term)
        if facs is None:
            if early_exit and failed.monotone:
                break
            continue
        out.append(make_record(gid, facs))
    return out


def scan_characteristic(
    cb: CharBounds,
    pi: PrimeSet,
    orders: dict[int, int] | None = None,
    early_exit: bool = True,
    route: str = "cyclotomic",
) -> list[GroupRecord]:
    """All Lie-type records of characteristic ``cb.p``.

    ``route="cyclotomic"`` factors terms through a per-characteristic table of
    cyclotomic values; ``route="direct"`` trial-divides each term value.
    """
    if route == "direct":
        factor_term = direct_term_factorizer(pi)
        exponents = range(1, cb.k_max + 1)
    else:
        if orders is None:
            orders = {r: multiplicative_order(cb.p, r) for r in pi if r != cb.p}
        table = CyclotomicTable(cb.p, pi, orders)
        factor_term = table.factorizer()
        # q - 1 divides every Lie-type order
        exponents = table.field_exponents(cb.k_max)
    out = []
    for k in exponents:
        for unit in work_units_for_k(cb, k):
            out.extend(scan_unit(unit, cb.rank_max, factor_term, early_exit))
    return out


def work_units_for_k(cb: CharBounds, k: int) -> Iterator[WorkUnit]:
    for family in LIE_FAMILIES:
        spec = SPECS[family]
        if spec.char and spec.char != cb.p:
            continue
        if spec.odd_k and k % 2 == 0:
            continue
        yield WorkUnit(family, cb.p, k)


def _alternating_records(pi: PrimeSet, alt_max: int) -> list[GroupRecord]:
    out = []
    for n in range(5, alt_max + 1):
        facs = order_factors(alternating(n), pi)
        if facs is None:
            # primes <= n are missing from pi; larger n cannot recover
            break
        out.append(make_record(alternating(n), facs))
    return out


# worker-process state, installed once per process by the pool initializer
_WORKER: dict = {}


def _init_worker(primes: tuple[int, ...], early_exit: bool, route: str) -> None:
    _WORKER["pi"] = PrimeSet(primes)
    _WORKER["early_exit"] = early_exit
    _WORKER["route"] = route


def _run_char(args) -> list[GroupRecord]:
    cb, orders = args
    return scan_characteristic(cb, _WORKER["pi"], orders, _WORKER["early_exit"], _WORKER["route"])


def enumerate_simple_groups(
    pi: PrimeSet,
    k_margin: int = 1,
    workers: int = 1,
    early_exit: bool = True,
    rank_margin: int = 1,
    route: str = "cyclotomic",
) -> list[GroupRecord]:
    """All non-abelian simple groups with spectrum inside ``pi``, canonically sorted.

    Output is identical for any ``workers`` count.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    rows = order_rows(pi)
    bounds = compute_bounds(pi, k_margin, rank_margin, rows)
    records: list[GroupRecord] = []
    for gid in fixed_candidates():
        facs = order_factors(gid, pi)
        if facs is not None:
            records.append(make_record(gid, facs))
    records.extend(_alternating_records(pi, bounds.alt_max))

    tasks = [(cb, rows[cb.p]) for cb in bounds.chars if cb.k_max > 0]
    if workers == 1:
        _init_worker(pi.primes, early_exit, route)
        for task in tasks:
            records.extend(_run_char(task))
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(pi.primes, early_exit, route)
        ) as pool:
            for chunk in pool.map(_run_char, tasks, chunksize=max(1, len(tasks) // (4 * workers))):
                records.extend(chunk)
    unique = {r.name: r for r in records}
    log.debug("enumerated %d groups over %d primes", len(unique), len(pi))
    return sorted(unique.values(), key=GroupRecord.sort_key)
