import math

import pytest

from trichrome.constructors import (
    alt,
    direct_product,
    factor_prime_power,
    parse_group_spec,
    pgammal2,
    pgl2,
    psl2,
    sym,
)
from trichrome.permcore import derived_series, is_solvable, orbits


def psl2_order(q):
    return q * (q * q - 1) // math.gcd(2, q - 1)


def pgl2_order(q):
    return q * (q * q - 1)


def test_factor_prime_power():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(9) == (3, 2)
    assert factor_prime_power(13) == (13, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            factor_prime_power(bad)


def test_psl2_8_order_504():
    assert psl2(8).order() == 504


def test_psl2_5_order_60():
    assert psl2(5).order() == 60


def test_psl2_4_is_alt5():
    G = psl2(4)
    assert G.order() == 60
    series = derived_series(G)
    assert len(series) == 1  # perfect
    assert not is_solvable(G)


def test_pgl2_9_order_720():
    assert pgl2(9).order() == 720


def test_pgammal2_orders():
    assert pgammal2(8).order() == 1512
    assert pgammal2(5).order() == 120
    assert pgammal2(9).order() == 1440


def test_order_formulas_small_sweep():
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27):
        assert psl2(q).order() == psl2_order(q)
        assert pgl2(q).order() == pgl2_order(q)
    for q, f in ((4, 2), (8, 3), (9, 2), (16, 4), (25, 2), (27, 3)):
        assert pgammal2(q).order() == pgl2_order(q) * f


def test_order_formulas_larger_q():
    assert psl2(32).order() == psl2_order(32)
    assert pgammal2(32).order() == pgl2_order(32) * 5
    assert psl2(49).order() == psl2_order(49)
    assert pgl2(49).order() == pgl2_order(49)
    assert psl2(64).order(budget=2 * 10**6) == psl2_order(64)


def test_containment_chain():
    for q in (5, 8, 9):
        inner = psl2(q).elements()
        mid = pgl2(q).elements()
        outer = pgammal2(q).elements()
        assert inner <= mid <= outer


def test_pgammal2_two_transitive():
    for q in (4, 5, 8, 9, 16):
        G = pgammal2(q)
        n = G.degree
        assert orbits(G) == [frozenset(range(n))]
        # orbit of the ordered pair (0, 1) is all ordered pairs
        els = G.elements()
        pairs = {(g[0], g[1]) for g in els}
        assert len(pairs) == n * (n - 1)


def test_psl2_perfect():
    for q in (4, 5, 7, 8, 9, 11, 13, 16):
        G = psl2(q)
        series = derived_series(G)
        assert len(series) == 1, f"psl2({q}) is not perfect"


def test_sym_alt_orders():
    for n in range(1, 9):
        assert sym(n).order() == math.factorial(n)
    assert alt(5).order() == 60
    for n in range(3, 9):
        assert alt(n).order() == math.factorial(n) // 2
    assert alt(2).order() == 1


def test_alt4_solvable_alt5_not():
    assert is_solvable(alt(4))
    assert not is_solvable(alt(5))


def test_direct_product_order():
    G = direct_product(sym(4), sym(3))
    assert G.degree == 7
    assert G.order() == 144


def test_parse_group_spec():
    assert parse_group_spec("sym:4").order() == 24
    assert parse_group_spec("alt:5").order() == 60
    assert parse_group_spec("psl2:8").order() == 504
    assert parse_group_spec("prod(sym:4,sym:3)").order() == 144
    assert parse_group_spec("prod(prod(sym:3,sym:3),alt:4)").order() == 432


def test_parse_group_spec_file(tmp_path):
    path = tmp_path / "c6.grp"
    path.write_text("6\n1 2 3 4 5 0\n")
    G = parse_group_spec(f"file:{path}")
    assert G.order() == 6


def test_parse_group_spec_errors():
    for bad in ("nope:3", "psl2:6", "psl2:3", "prod(sym:3)", "psl2"):
        with pytest.raises(ValueError):
            parse_group_spec(bad)
