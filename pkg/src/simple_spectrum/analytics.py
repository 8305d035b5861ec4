"""Post-processing of an enumeration: classes by largest prime, generic primes, K_n strata."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups import ALIAS_OF, Family, GroupId, GroupRecord, alternating, display_name, lie
from .primes import DomainError, is_prime, next_prime


@dataclass
class SpectrumClass:
    """Groups whose largest prime divisor is ``p``."""

    p: int
    members: list[GroupRecord] = field(default_factory=list)
    generic_members: list[GroupRecord] = field(default_factory=list)
    nongeneric_members: list[GroupRecord] = field(default_factory=list)

    @property
    def is_generic(self) -> bool:
        return not self.nongeneric_members

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class KnStratum:
    n: int
    members: list[GroupRecord]

    @property
    def count(self) -> int:
        return len(self.members)


def generic_groups(p: int) -> list[GroupId]:
    """``L2(p), A_p, ..., A_{p'-1}`` with ``p'`` the next prime, after canonicalization."""
    if p < 5 or not is_prime(p):
        raise DomainError(f"generic groups are defined for primes p >= 5, got {p}")
    ids = [lie(Family.L, 2, p)] + [alternating(n) for n in range(p, next_prime(p))]
    out: list[GroupId] = []
    for gid in ids:
        gid = ALIAS_OF.get(gid, gid)
        if gid not in out:
            out.append(gid)
    return out


def partition_by_max_prime(records: Iterable[GroupRecord]) -> dict[int, SpectrumClass]:
    classes: dict[int, SpectrumClass] = {}
    for rec in records:
        classes.setdefault(rec.max_prime, SpectrumClass(rec.max_prime)).members.append(rec)
    for p, cls in classes.items():
        generic = {display_name(g) for g in generic_groups(p)} if p >= 5 else set()
        for rec in cls.members:
            (cls.generic_members if rec.name in generic else cls.nongeneric_members).append(rec)
    return dict(sorted(classes.items()))


def _in_range(p: int, lo: int | None, hi: int | None) -> bool:
    return (lo is None or p > lo) and (hi is None or p < hi)


def classify_generic_primes(
    partition: dict[int, SpectrumClass], lo: int | None = None, hi: int | None = None
) -> list[int]:
    """Primes ``lo < p < hi`` whose class has only generic members."""
    return [p for p, c in partition.items() if _in_range(p, lo, hi) and c.is_generic]


def nongeneric_classes(
    partition: dict[int, SpectrumClass], lo: int | None = None, hi: int | None = None
) -> list[SpectrumClass]:
    return [c for p, c in partition.items() if _in_range(p, lo, hi) and not c.is_generic]


def stratify_kn(records: Iterable[GroupRecord]) -> list[KnStratum]:
    strata: dict[int, list[GroupRecord]] = {}
    for rec in records:
        strata.setdefault(rec.spectrum_size, []).append(rec)
    return [KnStratum(n, strata[n]) for n in sorted(strata)]


@dataclass
class ExtremeLevel:
    size: int
    witnesses: list[GroupRecord]
    # witnesses grouped by identical spectrum, largest groups first
    shared: list[list[GroupRecord]]


def extremes(records: Sequence[GroupRecord], depth: int = 2) -> list[ExtremeLevel]:
    """Largest spectrum sizes among non-alternating groups, ``depth`` levels deep."""
    pool = [r for r in records if r.gid.family is not Family.ALTERNATING]
    sizes = sorted({r.spectrum_size for r in pool}, reverse=True)[:depth]
    levels = []
    for size in sizes:
        wit = [r for r in pool if r.spectrum_size == size]
        by_spec: dict[tuple[int, ...], list[GroupRecord]] = {}
        for r in wit:
            by_spec.setdefault(r.spectrum, []).append(r)
        shared = sorted(by_spec.values(), key=lambda g: (-len(g), g[0].name))
        levels.append(ExtremeLevel(size, wit, shared))
    return levels
