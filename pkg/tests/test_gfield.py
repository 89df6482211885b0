import pytest

from trichrome.gfield import FieldSpec, field_arith, field_make, frobenius, is_prime


def brute_modulus_search(p, f):
    """Independent oracle: check irreducibility by exhaustive root/factor scan."""
    from itertools import product

    def poly_eval_all(c):  # has a root in GF(p)?
        return any(sum(ci * pow(x, i, p) for i, ci in enumerate(c)) % p == 0 for x in range(p))

    def times(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def divides(d, c):
        c = list(c)
        while len(c) >= len(d) and any(c):
            if c[-1] == 0:
                c.pop()
                continue
            shift = len(c) - len(d)
            lead = c[-1] * pow(d[-1], p - 2, p) % p
            for j in range(len(d)):
                c[shift + j] = (c[shift + j] - lead * d[j]) % p
            c.pop()
        return not any(c)

    def irreducible(c):
        deg = len(c) - 1
        if deg <= 3:
            return not poly_eval_all(c) if deg > 1 else True
        for dd in range(2, deg // 2 + 1):
            for tail in product(range(p), repeat=dd):
                cand = list(tail) + [1]
                if divides(cand, c):
                    return False
        return not poly_eval_all(c)

    for k in range(p**f):
        digits = []
        kk = k
        for _ in range(f):
            digits.append(kk % p)
            kk //= p
        cand = tuple(digits) + (1,)
        if cand[0] != 0 and irreducible(cand):
            return cand
    raise AssertionError


def test_primality_helper():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_field_make_trivial_gf2():
    spec = field_make(2, 1)
    assert spec.q == 2
    assert spec.modulus == (0, 1)


def test_field_make_gf8_modulus():
    # exhaustive oracle over the 4 monic cubics with nonzero constant term
    assert brute_modulus_search(2, 3) == (1, 1, 0, 1)  # x^3 + x + 1
    spec = field_make(2, 3)
    assert spec.modulus == (1, 1, 0, 1)


def test_field_make_gf9_modulus():
    assert brute_modulus_search(3, 2) == (1, 0, 1)  # x^2 + 1
    spec = field_make(3, 2)
    assert spec.modulus == (1, 0, 1)


def test_field_make_rejects_bad_input():
    with pytest.raises(ValueError):
        field_make(6, 1)
    with pytest.raises(ValueError):
        field_make(2, 21)  # 2^21 over cap


def test_gf8_reduction_example():
    # x * x^2 = x + 1 after reduction by x^3 + x + 1
    spec = field_make(2, 3)
    x = spec.elem((0, 1, 0))
    x2 = spec.elem((0, 0, 1))
    assert spec.mul(x, x2) == spec.elem((1, 1, 0))


def test_inverse_axiom_exhaustive():
    for p, f in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (7, 1), (2, 4), (13, 1)]:
        spec = field_make(p, f)
        for a in spec.elements():
            if a == spec.zero:
                with pytest.raises(ZeroDivisionError):
                    spec.inv(a)
            else:
                assert spec.mul(a, spec.inv(a)) == spec.one


def test_gf9_multiplicative_order():
    spec = field_make(3, 2)
    x = spec.elem((0, 1))
    assert spec.pow_(x, 8) == spec.one
    assert spec.pow_(x, 4) != spec.one or spec.mult_order(x) < 8


def test_field_axioms_exhaustive_small():
    # associativity, commutativity, distributivity for q <= 64
    for p, f in [(2, 2), (3, 1), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4), (2, 5), (3, 3), (2, 6)]:
        spec = field_make(p, f)
        els = list(spec.elements())
        sample = els if spec.q <= 16 else els[::3]
        for a in sample:
            for b in sample:
                assert spec.add(a, b) == spec.add(b, a)
                assert spec.mul(a, b) == spec.mul(b, a)
                for c in sample[:5]:
                    assert spec.mul(a, spec.add(b, c)) == spec.add(spec.mul(a, b), spec.mul(a, c))
                    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))


def test_multiplicative_group_cyclic():
    for p, f in [(2, 3), (3, 2), (2, 5), (31, 1), (5, 2), (2, 10)]:
        spec = field_make(p, f)
        g = spec.primitive_element()
        assert spec.mult_order(g) == spec.q - 1


def test_frobenius_gf8():
    spec = field_make(2, 3)
    x = spec.elem((0, 1, 0))
    assert frobenius(spec, x) == spec.mul(x, x)
    # frobenius^3 is the identity on all 8 elements
    for a in spec.elements():
        b = a
        for _ in range(3):
            b = spec.frobenius(b)
        assert b == a


def test_frobenius_fixed_field_gf9():
    spec = field_make(3, 2)
    fixed = [a for a in spec.elements() if spec.frobenius(a) == a]
    assert len(fixed) == 3
    assert all(a[1] == 0 for a in fixed)  # exactly the prime field


def test_frobenius_is_additive_exhaustive():
    for p, f in [(2, 3), (3, 2), (2, 4), (2, 6), (5, 1)]:
        spec = field_make(p, f)
        els = list(spec.elements())
        for a in els:
            for b in els[:: max(1, len(els) // 16)]:
                lhs = spec.frobenius(spec.add(a, b))
                rhs = spec.add(spec.frobenius(a), spec.frobenius(b))
                assert lhs == rhs


def test_field_arith_dispatch():
    spec = field_make(3, 2)
    a = spec.elem((2, 1))
    b = spec.elem((1, 2))
    assert field_arith(spec, a, b, "add") == spec.add(a, b)
    assert field_arith(spec, a, b, "mul") == spec.mul(a, b)
    assert field_arith(spec, a, None, "inv") == spec.inv(a)
    assert field_arith(spec, a, 5, "pow") == spec.pow_(a, 5)
    with pytest.raises(ValueError):
        field_arith(spec, a, b, "sub-nope")


def test_fieldspec_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2 over GF(2)


def test_enumeration_roundtrip():
    spec = field_make(3, 3)
    for k in range(spec.q):
        assert spec.index_of(spec.from_index(k)) == k
