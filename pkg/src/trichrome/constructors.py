"""Concrete permutation groups: PSL2/PGL2/PGammaL2 on the projective line,
symmetric and alternating groups, and direct products.

Projective-line groups are built directly as permutation groups from the
Moebius action; there is never a matrix group with a separate quotient
step.  Point labels: the affine point x gets the index of x in field
enumeration order, and the point at infinity (1:0) comes last, so the
labeling is deterministic and reproducible.
"""

from __future__ import annotations

import re

from .gfield import FieldElem, FieldSpec, field_make, is_prime
from .permcore import DEFAULT_BUDGET, PermGroup, pack_images, parse_generator_file


def factor_prime_power(q: int) -> tuple[int, int]:
    """q = p^f with p prime, or raise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p == 0:
            f = 0
            m = q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, f
    return q, 1  # q itself is prime


def proj_point_count(q: int) -> int:
    return q + 1


def _moebius_perm(spec: FieldSpec, a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem):
    """Permutation of the q+1 projective points by x -> (ax+b)/(cx+d).

    Affine points are indexed by field enumeration order; infinity is the
    last point, index q.
    """
    q = spec.q
    inf = q
    images = [0] * (q + 1)
    for k in range(q):
        x = spec.from_index(k)
        num = spec.add(spec.mul(a, x), b)
        den = spec.add(spec.mul(c, x), d)
        if den == spec.zero:
            images[k] = inf
        else:
            images[k] = spec.index_of(spec.mul(num, spec.inv(den)))
    if c == spec.zero:
        images[inf] = inf
    else:
        images[inf] = spec.index_of(spec.mul(a, spec.inv(c)))
    return pack_images(images, q + 1)


def _frobenius_point_perm(spec: FieldSpec):
    """(x:y) -> (x^p:y^p): affine x -> x^p, infinity fixed."""
    q = spec.q
    images = [spec.index_of(spec.frobenius(spec.from_index(k))) for k in range(q)]
    images.append(q)
    return pack_images(images, q + 1)


def _check_q(q: int) -> tuple[int, int]:
    p, f = factor_prime_power(q)
    if q < 4:
        raise ValueError(f"projective-line groups need q >= 4, got {q}")
    if q > 2**12:
        raise ValueError(f"q = {q} exceeds the materialization cap 2**12")
    return p, f


def pgl2(q: int) -> PermGroup:
    """PGL2(q) on the projective line; order q(q^2-1)."""
    p, f = _check_q(q)
    spec = field_make(p, f)
    a = spec.primitive_element()
    gens = [
        _moebius_perm(spec, spec.one, spec.one, spec.zero, spec.one),  # x -> x+1
        _moebius_perm(spec, a, spec.zero, spec.zero, spec.one),        # x -> a*x
        _moebius_perm(spec, spec.zero, spec.one, spec.one, spec.zero), # x -> 1/x
    ]
    return PermGroup(q + 1, gens)


def psl2(q: int) -> PermGroup:
    """PSL2(q) on the projective line; order q(q^2-1)/gcd(2, q-1).

    For even q this equals PGL2(q).  For odd q the generators are the
    translation x -> x+1, the square scaling x -> a^2 x for a fixed
    multiplicative generator a, and the inversion x -> -1/x; correctness
    is certified by the order check, not by construction.
    """
    p, f = _check_q(q)
    if q % 2 == 0:
        return pgl2(q)
    spec = field_make(p, f)
    a = spec.primitive_element()
    a2 = spec.mul(a, a)
    minus_one = spec.neg(spec.one)
    gens = [
        _moebius_perm(spec, spec.one, spec.one, spec.zero, spec.one),    # x -> x+1
        _moebius_perm(spec, a2, spec.zero, spec.zero, spec.one),         # x -> a^2 x
        _moebius_perm(spec, spec.zero, minus_one, spec.one, spec.zero),  # x -> -1/x
    ]
    return PermGroup(q + 1, gens)


def pgammal2(q: int) -> PermGroup:
    """PGammaL2(q) = PGL2(q) extended by the field automorphisms.

    Realized by adjoining the Frobenius permutation (x:y) -> (x^p:y^p);
    order q(q^2-1)f.
    """
    p, f = _check_q(q)
    spec = field_make(p, f)
    base = pgl2(q)
    gens = list(base.generators)
    if f > 1:
        gens.append(_frobenius_point_perm(spec))
    return PermGroup(q + 1, gens)


def sym(n: int) -> PermGroup:
    """Symmetric group on n points, order n!."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return PermGroup(1)
    transposition = pack_images([1, 0] + list(range(2, n)), n)
    cycle = pack_images(list(range(1, n)) + [0], n)
    return PermGroup(n, [transposition, cycle])


def alt(n: int) -> PermGroup:
    """Alternating group on n points, order n!/2 (trivial for n <= 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return PermGroup(n)
    three_cycle = pack_images([1, 2, 0] + list(range(3, n)), n)
    if n == 3:
        return PermGroup(3, [three_cycle])
    if n % 2 == 1:
        big = pack_images(list(range(1, n)) + [0], n)  # n-cycle, even
    else:
        big = pack_images([0] + list(range(2, n)) + [1], n)  # (n-1)-cycle on 1..n-1
    return PermGroup(n, [three_cycle, big])


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the two domains."""
    n, m = A.degree, B.degree
    gens = []
    for g in A.generators:
        gens.append(pack_images(list(g) + list(range(n, n + m)), n + m))
    for g in B.generators:
        gens.append(pack_images(list(range(n)) + [n + x for x in g], n + m))
    return PermGroup(n + m, gens)


# ---------------------------------------------------------------------------
# group-spec mini-language: psl2:q pgl2:q pgammal2:q sym:n alt:n
# prod(<spec>,<spec>) file:<path>

_SIMPLE_SPEC = re.compile(r"^(psl2|pgl2|pgammal2|sym|alt):(\d+)$")


def _split_product_args(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise ValueError(f"prod(...) needs two comma-separated specs: {body!r}")


def parse_group_spec(spec: str, budget: int = DEFAULT_BUDGET) -> PermGroup:
    """Parse the CLI group-spec mini-language into a PermGroup."""
    spec = spec.strip()
    m = _SIMPLE_SPEC.match(spec)
    if m:
        kind, value = m.group(1), int(m.group(2))
        builder = {"psl2": psl2, "pgl2": pgl2, "pgammal2": pgammal2, "sym": sym, "alt": alt}[kind]
        return builder(value)
    if spec.startswith("prod(") and spec.endswith(")"):
        left, right = _split_product_args(spec[5:-1])
        return direct_product(parse_group_spec(left, budget), parse_group_spec(right, budget))
    if spec.startswith("file:"):
        path = spec[5:]
        with open(path, "r", encoding="utf-8") as fh:
            return parse_generator_file(fh.read())
    raise ValueError(f"unrecognized group spec {spec!r}")
