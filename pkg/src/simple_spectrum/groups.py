"""Catalog of finite simple groups: order formulas, simplicity constraints, names.

Lie-type orders are data.  Each family is one ``FamilySpec`` row listing the
exponent of q and the factors ``q**d +/- 1`` of the universal group order,
plus the order of the center that is divided out.  A single evaluator turns a
row into an exact order or into a prime factorization over a prime set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Mapping

from .primes import DomainError, FactoredOrder, PrimeSet, constrained_factor, is_prime


class Family(str, Enum):
    ALTERNATING = "A"
    SPORADIC = "Spor"
    TITS = "Tits"
    L = "L"
    U = "U"
    S = "S"
    O_ODD = "O"
    O_PLUS = "O+"
    O_MINUS = "O-"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    TW_E6 = "2E6"
    TH_D4 = "3D4"
    SZ = "Sz"
    TW_G2 = "2G2"
    TW_F4 = "2F4"


@dataclass(frozen=True, order=True)
class GroupId:
    """Family tag plus parameters.

    ``n`` is the Atlas subscript for classical families (L_n, U_n, S_2m,
    O_2m+1, O+-_2m), the degree for alternating groups and the fixed rank for
    exceptional families.  ``q = p**k``.  Sporadic groups carry ``name``.
    """

    family: Family
    n: int = 0
    p: int = 0
    k: int = 0
    name: str = ""

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def is_lie(self) -> bool:
        return self.family in SPECS


def alternating(n: int) -> GroupId:
    return GroupId(Family.ALTERNATING, n)


def sporadic(name: str) -> GroupId:
    return GroupId(Family.SPORADIC, name=name)


TITS = GroupId(Family.TITS)


def lie(family: Family | str, n: int, p: int, k: int = 1) -> GroupId:
    family = Family(family)
    if family in FIXED_RANK:
        n = FIXED_RANK[family]
    return GroupId(family, n, p, k)


# ---------------------------------------------------------------------------
# sporadic groups: (order, factorization)

SPORADIC_ORDERS: dict[str, tuple[int, dict[int, int]]] = {
    "M11": (7920, {2: 4, 3: 2, 5: 1, 11: 1}),
    "M12": (95040, {2: 6, 3: 3, 5: 1, 11: 1}),
    "J1": (175560, {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1}),
    "M22": (443520, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1}),
    "J2": (604800, {2: 7, 3: 3, 5: 2, 7: 1}),
    "M23": (10200960, {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1}),
    "HS": (44352000, {2: 9, 3: 2, 5: 3, 7: 1, 11: 1}),
    "J3": (50232960, {2: 7, 3: 5, 5: 1, 17: 1, 19: 1}),
    "M24": (244823040, {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1}),
    "McL": (898128000, {2: 7, 3: 6, 5: 3, 7: 1, 11: 1}),
    "He": (4030387200, {2: 10, 3: 3, 5: 2, 7: 3, 17: 1}),
    "Ru": (145926144000, {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1}),
    "Suz": (448345497600, {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1}),
    "ON": (460815505920, {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1}),
    "Co3": (495766656000, {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1}),
    "Co2": (42305421312000, {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1}),
    "Fi22": (64561751654400, {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1}),
    "HN": (273030912000000, {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1}),
    "Ly": (51765179004000000, {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1}),
    "Th": (90745943887872000, {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1}),
    "Fi23": (4089470473293004800, {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1}),
    "Co1": (4157776806543360000, {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1}),
    "J4": (86775571046077562880, {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1}),
    "F3+": (1255205709190661721292800, {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1}),
    "B": (
        4154781481226426191177580544000000,
        {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1},
    ),
    "M": (
        808017424794512875886459904961710757005754368000000000,
        {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1, 31: 1, 41: 1, 47: 1, 59: 1, 71: 1},
    ),
}

TITS_ORDER = (17971200, {2: 11, 3: 3, 5: 2, 13: 1})


# ---------------------------------------------------------------------------
# Lie-type order formulas


@dataclass(frozen=True)
class Term:
    """The factor ``(q**d + sign) / (q**div + sign)`` (no division when ``div == 0``).

    ``monotone`` marks terms that recur in every higher rank of the family.
    """

    d: int
    sign: int
    div: int = 0
    monotone: bool = True

    def value(self, q: int) -> int:
        v = q**self.d + self.sign
        if self.div:
            den = q**self.div + self.sign
            quo, rem = divmod(v, den)
            assert rem == 0, f"{den} does not divide {v}"
            return quo
        return v


def _fixed(*pairs: tuple[int, int]) -> Callable[[int], list[Term]]:
    terms = [Term(d, s) for d, s in pairs]
    return lambda n: terms


def _linear_terms(n: int) -> list[Term]:
    return [Term(i, -1) for i in range(2, n + 1)]


def _unitary_terms(n: int) -> list[Term]:
    return [Term(i, 1 if i % 2 else -1) for i in range(2, n + 1)]


def _symplectic_terms(n: int) -> list[Term]:
    return [Term(2 * i, -1) for i in range(1, n // 2 + 1)]


def _orthogonal_terms(sign: int) -> Callable[[int], list[Term]]:
    def terms(n: int) -> list[Term]:
        m = n // 2
        return [Term(2 * i, -1) for i in range(1, m)] + [Term(m, sign, monotone=False)]

    return terms


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    q_power: Callable[[int], int]
    terms: Callable[[int], list[Term]]
    center: Callable[[int, int], int]
    rank: Callable[[int], int]
    # rank -> subscript, and the smallest rank tried during enumeration
    subscript: Callable[[int], int]
    min_rank: int
    char: int = 0
    odd_k: bool = False


def _one(n: int, q: int) -> int:
    return 1


def _const(v: int) -> Callable[[int], int]:
    return lambda n: v


SPECS: dict[Family, FamilySpec] = {
    Family.L: FamilySpec(
        Family.L, lambda n: n * (n - 1) // 2, _linear_terms,
        lambda n, q: math.gcd(n, q - 1), lambda n: n - 1, lambda l: l + 1, 1,
    ),
    Family.U: FamilySpec(
        Family.U, lambda n: n * (n - 1) // 2, _unitary_terms,
        lambda n, q: math.gcd(n, q + 1), lambda n: n - 1, lambda l: l + 1, 2,
    ),
    Family.S: FamilySpec(
        Family.S, lambda n: (n // 2) ** 2, _symplectic_terms,
        lambda n, q: math.gcd(2, q - 1), lambda n: n // 2, lambda l: 2 * l, 2,
    ),
    Family.O_ODD: FamilySpec(
        Family.O_ODD, lambda n: (n // 2) ** 2, _symplectic_terms,
        lambda n, q: math.gcd(2, q - 1), lambda n: n // 2, lambda l: 2 * l + 1, 3,
    ),
    Family.O_PLUS: FamilySpec(
        Family.O_PLUS, lambda n: (n // 2) * (n // 2 - 1), _orthogonal_terms(-1),
        lambda n, q: math.gcd(4, q ** (n // 2) - 1), lambda n: n // 2, lambda l: 2 * l, 4,
    ),
    Family.O_MINUS: FamilySpec(
        Family.O_MINUS, lambda n: (n // 2) * (n // 2 - 1), _orthogonal_terms(1),
        lambda n, q: math.gcd(4, q ** (n // 2) + 1), lambda n: n // 2, lambda l: 2 * l, 4,
    ),
    Family.G2: FamilySpec(
        Family.G2, _const(6), _fixed((6, -1), (2, -1)), _one, _const(2), _const(2), 2,
    ),
    Family.F4: FamilySpec(
        Family.F4, _const(24), _fixed((12, -1), (8, -1), (6, -1), (2, -1)), _one, _const(4), _const(4), 4,
    ),
    Family.E6: FamilySpec(
        Family.E6, _const(36), _fixed((12, -1), (9, -1), (8, -1), (6, -1), (5, -1), (2, -1)),
        lambda n, q: math.gcd(3, q - 1), _const(6), _const(6), 6,
    ),
    Family.E7: FamilySpec(
        Family.E7, _const(63),
        _fixed((18, -1), (14, -1), (12, -1), (10, -1), (8, -1), (6, -1), (2, -1)),
        lambda n, q: math.gcd(2, q - 1), _const(7), _const(7), 7,
    ),
    Family.E8: FamilySpec(
        Family.E8, _const(120),
        _fixed((30, -1), (24, -1), (20, -1), (18, -1), (14, -1), (12, -1), (8, -1), (2, -1)),
        _one, _const(8), _const(8), 8,
    ),
    Family.TW_E6: FamilySpec(
        Family.TW_E6, _const(36), _fixed((12, -1), (9, 1), (8, -1), (6, -1), (5, 1), (2, -1)),
        lambda n, q: math.gcd(3, q + 1), _const(6), _const(6), 6,
    ),
    Family.TH_D4: FamilySpec(
        Family.TH_D4, _const(12),
        lambda n: [Term(12, -1, div=4), Term(6, -1), Term(2, -1)],
        _one, _const(4), _const(4), 4,
    ),
    Family.SZ: FamilySpec(
        Family.SZ, _const(2), _fixed((2, 1), (1, -1)), _one, _const(2), _const(2), 2, char=2, odd_k=True,
    ),
    Family.TW_G2: FamilySpec(
        Family.TW_G2, _const(3), _fixed((3, 1), (1, -1)), _one, _const(2), _const(2), 2, char=3, odd_k=True,
    ),
    Family.TW_F4: FamilySpec(
        Family.TW_F4, _const(12), _fixed((6, 1), (4, -1), (3, 1), (1, -1)),
        _one, _const(4), _const(4), 4, char=2, odd_k=True,
    ),
}

LIE_FAMILIES: tuple[Family, ...] = tuple(SPECS)
CLASSICAL = (Family.L, Family.U, Family.S, Family.O_ODD, Family.O_PLUS, Family.O_MINUS)
FIXED_RANK = {f: SPECS[f].min_rank for f in LIE_FAMILIES if f not in CLASSICAL}


# ---------------------------------------------------------------------------
# validity, simplicity and canonical representatives

# non-canonical member -> canonical member of its isomorphism class
ALIAS_OF: dict[GroupId, GroupId] = {
    lie(Family.L, 2, 2, 2): alternating(5),
    lie(Family.L, 2, 5): alternating(5),
    lie(Family.L, 2, 3, 2): alternating(6),
    lie(Family.L, 4, 2): alternating(8),
    lie(Family.L, 3, 2): lie(Family.L, 2, 7),
    lie(Family.U, 4, 2): lie(Family.S, 4, 3),
}

ALIASES: dict[GroupId, tuple[GroupId, ...]] = {}
for _alias, _canon in ALIAS_OF.items():
    ALIASES[_canon] = ALIASES.get(_canon, ()) + (_alias,)


def is_valid(gid: GroupId) -> bool:
    """Structural validity: the order formula makes sense for these parameters."""
    f = gid.family
    if f is Family.ALTERNATING:
        return gid.n >= 2
    if f is Family.SPORADIC:
        return gid.name in SPORADIC_ORDERS
    if f is Family.TITS:
        return True
    if f not in SPECS or gid.k < 1 or not is_prime(gid.p):
        return False
    spec = SPECS[f]
    if spec.char and gid.p != spec.char:
        return False
    if spec.odd_k and gid.k % 2 == 0:
        return False
    n = gid.n
    if f in (Family.L, Family.U):
        return n >= 1
    if f is Family.S:
        return n >= 2 and n % 2 == 0
    if f is Family.O_ODD:
        return n >= 3 and n % 2 == 1
    if f in (Family.O_PLUS, Family.O_MINUS):
        return n >= 2 and n % 2 == 0
    return n == FIXED_RANK[f]


def is_simple(gid: GroupId) -> bool:
    """True when the parameters name a non-abelian simple group."""
    if not is_valid(gid):
        return False
    f, n, q = gid.family, gid.n, gid.q
    if f is Family.ALTERNATING:
        return n >= 5
    if f is Family.L:
        return n >= 3 or (n == 2 and q > 3)
    if f is Family.U:
        return n >= 4 or (n == 3 and q > 2)
    if f is Family.S:
        return n >= 6 or (n == 4 and q > 2)
    if f is Family.G2:
        return q > 2
    if f in (Family.SZ, Family.TW_G2, Family.TW_F4):
        return gid.k > 1
    return True


def is_admissible(gid: GroupId) -> bool:
    """Simple, inside the enumeration domain, and the canonical member of its class.

    ``O_{2m+1}`` needs ``m >= 3`` and odd q; ``O+-_{2m}`` needs ``m >= 4``.
    Smaller or even-characteristic cases coincide with other families.
    """
    if not is_simple(gid):
        return False
    f = gid.family
    if f is Family.O_ODD and (gid.n < 7 or gid.p == 2):
        return False
    if f in (Family.O_PLUS, Family.O_MINUS) and gid.n < 8:
        return False
    return gid not in ALIAS_OF


# ---------------------------------------------------------------------------
# orders


def group_order(gid: GroupId) -> int:
    """Exact order of the simple group (center already divided out)."""
    if not is_valid(gid):
        raise DomainError(f"invalid group parameters {gid}")
    f = gid.family
    if f is Family.ALTERNATING:
        return math.factorial(gid.n) // 2
    if f is Family.SPORADIC:
        return SPORADIC_ORDERS[gid.name][0]
    if f is Family.TITS:
        return TITS_ORDER[0]
    spec = SPECS[f]
    q = gid.q
    order = q ** spec.q_power(gid.n)
    for term in spec.terms(gid.n):
        order *= term.value(q)
    center = spec.center(gid.n, q)
    order, rem = divmod(order, center)
    assert rem == 0
    return order


def _small_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=64)
def _primes_upto(n: int) -> tuple[int, ...]:
    from ._kernels import sieve

    return tuple(int(x) for x in sieve(n))


def _legendre(n: int, p: int) -> int:
    e, m = 0, n
    while m:
        m //= p
        e += m
    return e


def alternating_factors(n: int) -> dict[int, int]:
    out = {p: _legendre(n, p) for p in _primes_upto(n)}
    out[2] -= 1
    return out


TermFactorizer = Callable[[Term, GroupId], "Mapping[int, int] | None"]


def lie_factors(gid: GroupId, factor_term: TermFactorizer) -> tuple[dict[int, int] | None, Term | None]:
    """Factor a Lie-type order term by term.

    Returns ``(factors, None)`` on success or ``(None, term)`` naming the first
    term that ``factor_term`` rejected.
    """
    spec = SPECS[gid.family]
    acc: dict[int, int] = {}
    a = spec.q_power(gid.n)
    if a:
        acc[gid.p] = a * gid.k
    # cheapest terms first so rejection happens early
    for term in sorted(spec.terms(gid.n), key=lambda t: t.d):
        f = factor_term(term, gid)
        if f is None:
            return None, term
        for r, e in f.items():
            acc[r] = acc.get(r, 0) + e
    for r, e in _small_factor(spec.center(gid.n, gid.q)).items():
        left = acc.get(r, 0) - e
        if left < 0:
            raise AssertionError(f"negative exponent of {r} in {gid}: formula bug")
        acc[r] = left
    return {r: e for r, e in sorted(acc.items()) if e}, None


def direct_term_factorizer(pi: PrimeSet) -> TermFactorizer:
    def factor_term(term: Term, gid: GroupId):
        fo = constrained_factor(term.value(gid.q), pi)
        return fo.factors if fo.smooth else None

    return factor_term


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class GroupRecord:
    gid: GroupId
    name: str
    order_factors: FactoredOrder
    aliases: tuple[GroupId, ...] = ()
    spectrum: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "spectrum", tuple(sorted(self.order_factors.factors)))

    @property
    def max_prime(self) -> int:
        return self.spectrum[-1]

    @property
    def spectrum_size(self) -> int:
        return len(self.spectrum)

    def sort_key(self):
        return (self.max_prime, self.spectrum_size, self.name)

    def order(self) -> int:
        return self.order_factors.value()


def make_record(gid: GroupId, factors: Mapping[int, int]) -> GroupRecord:
    return GroupRecord(gid, canonical_name(gid), FactoredOrder(dict(factors)), ALIASES.get(gid, ()))


def order_factors(gid: GroupId, pi: PrimeSet, factor_term: TermFactorizer | None = None):
    """Factorization of ``|G|`` over ``pi`` or None when some prime lies outside ``pi``."""
    f = gid.family
    if f is Family.ALTERNATING:
        if gid.n >= 2 and any(r not in pi for r in _primes_upto(gid.n)):
            return None
        return alternating_factors(gid.n)
    if f in (Family.SPORADIC, Family.TITS):
        facs = SPORADIC_ORDERS[gid.name][1] if f is Family.SPORADIC else TITS_ORDER[1]
        return dict(facs) if all(r in pi for r in facs) else None
    return lie_factors(gid, factor_term or direct_term_factorizer(pi))[0]


def spectrum(gid: GroupId, pi: PrimeSet) -> GroupRecord | None:
    """Record for ``gid`` when its prime spectrum lies in ``pi``, otherwise None.

    Each order term is trial-divided over ``pi``; the first term that is not
    ``pi``-smooth rejects the group.
    """
    if not is_valid(gid):
        raise DomainError(f"invalid group parameters {gid}")
    facs = order_factors(gid, pi)
    if facs is None:
        return None
    return make_record(gid, facs)


# ---------------------------------------------------------------------------
# names

_LABEL = {
    Family.L: "L", Family.U: "U", Family.S: "S", Family.O_ODD: "O",
    Family.O_PLUS: "O+", Family.O_MINUS: "O-",
}


def field_label(p: int, k: int) -> str:
    q = p**k
    return f"{p}^{k}" if k > 1 and q > 100 else str(q)


def display_name(gid: GroupId) -> str:
    f = gid.family
    if f is Family.ALTERNATING:
        return f"A{gid.n}"
    if f is Family.SPORADIC:
        return gid.name
    if f is Family.TITS:
        return "2F4(2)'"
    field_ = field_label(gid.p, gid.k)
    if f in _LABEL:
        return f"{_LABEL[f]}{gid.n}({field_})"
    return f"{f.value}({field_})"


def canonical_name(gid: GroupId) -> str:
    """Atlas-style name; fields above 100 that are proper powers print as ``p^k``."""
    if not is_admissible(gid):
        raise DomainError(f"{gid} is not a canonical simple group")
    return display_name(gid)


_NAME_RE = re.compile(r"^(L|U|S|O\+|O-|O|G2|F4|E6|E7|E8|2E6|3D4|Sz|2G2|2F4)(\d*)\((\d+)(?:\^(\d+))?\)$")


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise DomainError("field size is not a prime power")
            return p, k
    raise DomainError("field size must be at least 2")


def parse_name(text: str) -> GroupId:
    """Inverse of ``display_name``; accepts numeric or exponential field sizes."""
    text = text.strip()
    if text == "2F4(2)'":
        return TITS
    if text in SPORADIC_ORDERS:
        return sporadic(text)
    if re.fullmatch(r"A\d+", text):
        return alternating(int(text[1:]))
    m = _NAME_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse group name {text!r}")
    label, sub, base, exp = m.groups()
    if exp is None:
        p, k = _prime_power(int(base))
    else:
        bp, bk = _prime_power(int(base))
        p, k = bp, bk * int(exp)
    family = next((f for f, lab in _LABEL.items() if lab == label), None) or Family(label)
    if family in CLASSICAL:
        if not sub:
            raise DomainError(f"missing subscript in {text!r}")
        return GroupId(family, int(sub), p, k)
    return lie(family, 0, p, k)
