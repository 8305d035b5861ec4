import math

import pytest

from simple_spectrum.groups import (
    ALIAS_OF,
    FIXED_RANK,
    SPORADIC_ORDERS,
    TITS,
    TITS_ORDER,
    Family,
    GroupId,
    Term,
    alternating,
    canonical_name,
    display_name,
    group_order,
    is_admissible,
    is_simple,
    lie,
    lie_factors,
    parse_name,
    spectrum,
    sporadic,
)
from simple_spectrum.primes import DomainError, PrimeSet, sieve_primes

F = Family


# ---------------------------------------------------------------------------
# independent oracle: orders from matrix-group sizes and Weyl degrees

def gl(n, q):
    return math.prod(q**n - q**i for i in range(n))


def gu(n, q):
    return q ** (n * (n - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(1, n + 1))


def sp(m, q):
    return q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1))


def go_even(m, q, eps):
    return 2 * q ** (m * (m - 1)) * (q**m - eps) * math.prod(q ** (2 * i) - 1 for i in range(1, m))


# (degrees, number of positive roots, center order as a function of q)
WEYL = {
    F.G2: ((2, 6), 6, lambda q: 1),
    F.F4: ((2, 6, 8, 12), 24, lambda q: 1),
    F.E6: ((2, 5, 6, 8, 9, 12), 36, lambda q: math.gcd(3, q - 1)),
    F.E7: ((2, 6, 8, 10, 12, 14, 18), 63, lambda q: math.gcd(2, q - 1)),
    F.E8: ((2, 8, 12, 14, 18, 20, 24, 30), 120, lambda q: 1),
}


def oracle_order(g):
    q, n = g.q, g.n
    if g.family is F.L:
        return gl(n, q) // (q - 1) // math.gcd(n, q - 1)
    if g.family is F.U:
        return gu(n, q) // (q + 1) // math.gcd(n, q + 1)
    if g.family is F.S:
        return sp(n // 2, q) // math.gcd(2, q - 1)
    if g.family is F.O_ODD:
        # Omega_{2m+1}(q) for odd q has index 2 in SO
        return sp((n - 1) // 2, q) // 2
    if g.family in (F.O_PLUS, F.O_MINUS):
        m = n // 2
        eps = 1 if g.family is F.O_PLUS else -1
        return go_even(m, q, eps) // (2 * math.gcd(4, q**m - eps))
    if g.family in WEYL:
        degs, N, d = WEYL[g.family]
        return q**N * math.prod(q**e - 1 for e in degs) // d(q)
    if g.family is F.TW_E6:
        return q**36 * (q**2 - 1) * (q**5 + 1) * (q**6 - 1) * (q**8 - 1) * (q**9 + 1) * (q**12 - 1) // math.gcd(3, q + 1)
    if g.family is F.TH_D4:
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if g.family is F.SZ:
        return q**2 * (q**2 + 1) * (q - 1)
    if g.family is F.TW_G2:
        return q**3 * (q**3 + 1) * (q - 1)
    if g.family is F.TW_F4:
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    raise AssertionError(g)


def small_ids():
    fields = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
    for p, k in fields:
        for rank in range(1, 6):
            ids = [lie(F.L, rank + 1, p, k), lie(F.U, rank + 1, p, k), lie(F.S, 2 * rank, p, k)]
            if p % 2 and rank >= 2:
                ids.append(lie(F.O_ODD, 2 * rank + 1, p, k))
            if rank >= 2:
                ids += [lie(F.O_PLUS, 2 * rank, p, k), lie(F.O_MINUS, 2 * rank, p, k)]
            yield from ids
        for fam in FIXED_RANK:
            g = lie(fam, 0, p, k)
            try:
                group_order(g)
            except DomainError:
                continue
            yield g
    yield lie(F.TW_G2, 0, 3, 3)


SMALL = [g for g in small_ids() if is_simple(g)]


def test_oracle_covers_every_family():
    assert {g.family for g in SMALL} == set(FIXED_RANK) | {F.L, F.U, F.S, F.O_ODD, F.O_PLUS, F.O_MINUS}


@pytest.mark.parametrize("g", SMALL, ids=display_name)
def test_order_matches_oracle(g):
    assert group_order(g) == oracle_order(g)


# orders copied from standard tables of finite simple groups
LITERAL = {
    "L2(8)": 504, "L3(3)": 5616, "L3(4)": 20160, "L5(2)": 9999360, "L4(3)": 6065280,
    "L2(16)": 4080, "L2(25)": 7800, "L2(27)": 9828, "L3(5)": 372000,
    "U3(3)": 6048, "U3(4)": 62400, "U3(5)": 126000, "U3(8)": 5515776, "U4(3)": 3265920,
    "U5(2)": 13685760, "U6(2)": 9196830720,
    "S4(4)": 979200, "S4(5)": 4680000, "S6(2)": 1451520, "S6(3)": 4585351680, "O7(3)": 4585351680,
    "O+8(2)": 174182400, "O-8(2)": 197406720, "O+8(3)": 4952179814400, "O-8(3)": 10151968619520,
    "G2(3)": 4245696, "G2(4)": 251596800, "G2(5)": 5859000000,
    "3D4(2)": 211341312, "Sz(8)": 29120, "Sz(32)": 32537600, "2G2(27)": 10073444472,
    "F4(2)": 3311126603366400, "E6(2)": 214841575522005575270400, "2E6(2)": 76532479683774853939200,
    "A5": 60, "A8": 20160, "L2(7)": 168, "S4(3)": 25920,
}


@pytest.mark.parametrize("name,order", LITERAL.items())
def test_literal_orders(name, order):
    assert group_order(parse_name(name)) == order


def test_e7_2_factorization():
    rec = spectrum(lie(F.E7, 0, 2), sieve_primes(200))
    assert rec.order_factors.factors == {2: 63, 3: 11, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 19: 1,
                                         31: 1, 43: 1, 73: 1, 127: 1}


def test_sporadic_factorizations_match_orders():
    assert len(SPORADIC_ORDERS) == 26
    for name, (order, facs) in SPORADIC_ORDERS.items():
        assert math.prod(r**e for r, e in facs.items()) == order, name
        assert group_order(sporadic(name)) == order
    assert math.prod(r**e for r, e in TITS_ORDER[1].items()) == TITS_ORDER[0]
    # Tits group has index 2 in 2F4(2)
    assert 2 * group_order(TITS) == oracle_order(GroupId(F.TW_F4, 4, 2, 1))


def test_alternating_orders():
    for n in range(5, 40):
        assert group_order(alternating(n)) == math.factorial(n) // 2


def test_symplectic_and_odd_orthogonal_orders_coincide():
    for q in (3, 5, 7, 9, 11, 25):
        p = next(r for r in range(2, q + 1) if q % r == 0)
        k = round(math.log(q, p))
        for m in range(3, 7):
            assert group_order(lie(F.S, 2 * m, p, k)) == group_order(lie(F.O_ODD, 2 * m + 1, p, k))


def test_aliases_have_equal_orders():
    for alias, canon in ALIAS_OF.items():
        assert group_order(alias) == group_order(canon)
        assert not is_admissible(alias) and is_admissible(canon)


def test_3d4_term_is_exact_quotient():
    t = Term(12, -1, div=4)
    for q in range(2, 60):
        assert t.value(q) == q**8 + q**4 + 1


def test_term_values():
    assert Term(5, 1).value(2) == 33
    assert Term(6, -1).value(3) == 728


def test_negative_exponent_is_a_hard_failure():
    def broken(term, gid):
        return {2: -1}
    with pytest.raises(AssertionError):
        lie_factors(lie(F.L, 2, 7), broken)


@pytest.mark.parametrize("g,ok", [
    (lie(F.L, 2, 2), False), (lie(F.L, 2, 3), False), (lie(F.U, 3, 2), False),
    (lie(F.S, 4, 2), False), (lie(F.G2, 0, 2), False), (lie(F.SZ, 0, 2), False),
    (lie(F.TW_G2, 0, 3), False), (lie(F.TW_F4, 0, 2), False),
    (lie(F.L, 2, 2, 2), True), (lie(F.SZ, 0, 2, 3), True), (lie(F.TW_F4, 0, 2, 3), True),
])
def test_small_nonsimple_cases(g, ok):
    assert is_simple(g) is ok


def test_domain_rules():
    assert not is_admissible(lie(F.O_ODD, 7, 2))
    assert not is_admissible(lie(F.O_ODD, 5, 3))
    assert not is_admissible(lie(F.O_PLUS, 6, 3))
    assert is_admissible(lie(F.O_PLUS, 8, 2)) and is_admissible(lie(F.O_ODD, 7, 3))
    assert not is_admissible(lie(F.SZ, 0, 2, 2))
    with pytest.raises(DomainError):
        group_order(lie(F.SZ, 0, 3, 3))


@pytest.mark.parametrize("name", [
    "A5", "M11", "F3+", "2F4(2)'", "L2(7)", "L2(81)", "L2(3^5)", "L2(647^2)", "U3(1031)",
    "O+32(2)", "O-30(2)", "O7(3)", "Sz(2^13)", "2G2(27)", "3D4(2)", "2E6(2)", "E8(2)", "L15(4)",
])
def test_names_round_trip(name):
    assert canonical_name(parse_name(name)) == name


def test_field_label_rule():
    assert canonical_name(lie(F.L, 2, 3, 4)) == "L2(81)"
    assert canonical_name(lie(F.L, 2, 3, 5)) == "L2(3^5)"
    assert canonical_name(lie(F.L, 2, 2, 6)) == "L2(64)"
    assert canonical_name(lie(F.L, 2, 2, 7)) == "L2(2^7)"
    assert canonical_name(lie(F.U, 3, 1031)) == "U3(1031)"
    assert parse_name("L2(3^4)") == parse_name("L2(81)")


def test_noncanonical_names_refused():
    with pytest.raises(DomainError):
        canonical_name(lie(F.L, 2, 5))
    with pytest.raises(DomainError):
        parse_name("X2(5)")
    with pytest.raises(DomainError):
        parse_name("L2(6)")


def test_spectrum_of_u5_11():
    pi = PrimeSet((2, 3, 5, 11, 37, 61, 13421))
    rec = spectrum(lie(F.U, 5, 11), pi)
    assert rec.spectrum == pi.primes
    assert rec.order() == oracle_order(lie(F.U, 5, 11))
    assert spectrum(lie(F.U, 5, 11), PrimeSet((2, 3, 5, 11, 37, 61))) is None
