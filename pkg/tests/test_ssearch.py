import pytest

from trichrome.constructors import alt, direct_product, pgl2, psl2, sym
from trichrome.permcore import PermGroup, closure, is_solvable, perm_from_cycles
from trichrome.ssearch import (
    m_max_bruteforce,
    s_aut_psl2,
    s_max,
    s_max_bruteforce,
    s_product_check,
)


def cyc(degree, *cycles):
    return perm_from_cycles(cycles, degree)


def group(degree, *cycles_list):
    return PermGroup(degree, [cyc(degree, *c) for c in cycles_list])


def dihedral(n):
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref])


def test_s_max_abelian_is_whole_group():
    G = group(4, [(0, 1, 2, 3)])
    res = s_max(G)
    assert res.s_value == 4
    assert not res.budget_hit


def test_s_max_solvable_group_fast_path():
    res = s_max(sym(4))
    assert res.s_value == 24
    witness_els = closure(list(res.witness)) if res.witness else frozenset()
    assert len(witness_els) == 24


def test_s_max_alt5():
    res = s_max(alt(5))
    assert res.s_value == 12  # point stabilizer Alt(4)
    assert not res.budget_hit
    H = PermGroup(5, res.witness)
    assert H.order() == 12
    assert is_solvable(H)


def test_s_max_sym5():
    assert s_max(sym(5)).s_value == 24


def test_s_max_psl2_7():
    assert s_max(psl2(7)).s_value == 24  # S4 maximal in PSL2(7)


def test_witness_is_solvable_of_reported_order():
    for G in (alt(5), sym(5), psl2(5)):
        res = s_max(G)
        if res.witness:
            H = PermGroup(G.degree, res.witness)
            assert H.order() == res.s_value
            assert is_solvable(H)


def test_s_max_monotone_under_subgroups():
    G = sym(5)
    sG = s_max(G).s_value
    for H in (alt(5), sym(4), group(5, [(0, 1, 2, 3, 4)])):
        border = (
            H.elements() <= G.elements()
            if H.degree == G.degree
            else False
        )
        if H.degree != G.degree:
            continue
        assert border
        assert s_max(H).s_value <= sG


def test_s_max_at_least_sylow():
    for G in (alt(5), sym(5), psl2(7)):
        n = G.order()
        largest_sylow = 1
        for p in (2, 3, 5, 7, 11, 13):
            part = 1
            while n % (part * p) == 0:
                part *= p
            largest_sylow = max(largest_sylow, part)
        assert s_max(G).s_value >= largest_sylow


def test_budget_hit_marks_lower_bound():
    res = s_max(alt(5), budget=2)
    assert res.budget_hit
    assert res.s_value >= 1
    assert 60 % res.s_value == 0


def test_oracle_agreement_small_corpus():
    # every maximal solvable subgroup in this corpus is at most 3-generated
    corpus = [
        alt(5),                     # 60
        sym(5),                     # 120
        psl2(5),                    # 60
        psl2(7),                    # 168
        psl2(4),                    # 60
        dihedral(6),                # 12
        direct_product(sym(3), sym(3)),   # 36
        direct_product(alt(4), sym(3)),   # 72
        group(7, [(0, 1, 2, 3, 4, 5, 6)], [(1, 2, 4), (3, 6, 5)]),  # F21
        direct_product(dihedral(4), sym(3)),  # 48
    ]
    for G in corpus:
        assert G.order() <= 400, "corpus cap"
        assert s_max(G).s_value == s_max_bruteforce(G)


def test_s_aut_psl2_5():
    assert s_aut_psl2(5) == 24


def test_s_aut_psl2_7():
    assert s_aut_psl2(7) == 42


def test_s_product_check_solvable_pair():
    assert s_product_check(sym(3), sym(3))


def test_s_product_check_alt5_sym3():
    assert s_product_check(alt(5), sym(3))


def test_m_max_oracle_psl2():
    assert m_max_bruteforce(psl2(5)) == 12   # Alt(4) inside Alt(5)
    assert m_max_bruteforce(psl2(7)) == 24   # Sym(4) inside PSL2(7)
    assert m_max_bruteforce(pgl2(5)) == 60   # Alt(5) inside Sym(5)


def test_m_max_oracle_psl2_8_borel():
    assert m_max_bruteforce(psl2(8)) == 56  # q(q-1) for q = 8
