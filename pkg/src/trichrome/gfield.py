"""Exact arithmetic in small finite fields GF(p^f).

Elements are coefficient tuples in the polynomial basis (constant term
first), always fully reduced mod p and mod the field's defining polynomial.
Everything here is sized for desk-scale group constructions: the field
order is capped at 2**20 and the modulus is found by exhaustive search.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

SIZE_CAP = 2**20

FieldElem = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mod(poly: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    # Remainder of poly (dense, constant-first) by the monic modulus, mod p.
    poly = [c % p for c in poly]
    deg_m = len(modulus) - 1
    for i in range(len(poly) - 1, deg_m - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            for j in range(deg_m):
                poly[i - deg_m + j] = (poly[i - deg_m + j] - c * modulus[j]) % p
    return poly[:deg_m]


def _poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, modulus, p)


def _poly_powmod(base: list[int], e: int, modulus: tuple[int, ...], p: int) -> list[int]:
    deg = len(modulus) - 1
    result = [1] + [0] * (deg - 1)
    acc = _poly_mod(list(base), modulus, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, modulus, p)
        acc = _poly_mulmod(acc, acc, modulus, p)
        e >>= 1
    return result


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    b = _poly_trim([c % p for c in b])
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            shift = len(a) - len(b)
            c = (a[-1] * inv_lead) % p
            if c:
                for j in range(len(b)):
                    a[shift + j] = (a[shift + j] - c * b[j]) % p
            a.pop()
            _poly_trim(a)
            if not a:
                break
        a, b = b, a
    return a


def _poly_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Rabin irreducibility test of a monic polynomial over GF(p).

    A monic degree-d polynomial f is irreducible iff x^(p^d) == x (mod f)
    and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r dividing d.  Degrees
    here are tiny (<= 20), so the naive powering is plenty.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    if coeffs[0] == 0:  # root at 0
        return False
    x = [0, 1] + [0] * (deg - 2)
    if _poly_powmod(x, p**deg, coeffs, p) != x:
        return False
    rem, primes = deg, []
    d = 2
    while d * d <= rem:
        if rem % d == 0:
            primes.append(d)
            while rem % d == 0:
                rem //= d
        d += 1
    if rem > 1:
        primes.append(rem)
    for r in primes:
        h = _poly_powmod(x, p ** (deg // r), coeffs, p)
        h[1] = (h[1] - 1) % p  # h := x^(p^(d/r)) - x
        g = _poly_gcd(h, list(coeffs), p)
        if len(g) != 1:
            return False
    return True


class FieldSpec:
    """A finite field GF(p^f), defined by a monic irreducible modulus.

    The modulus is the lowest monic irreducible of degree f when its
    non-leading coefficients are read as a base-p integer (constant digit
    least significant).  Immutable; safe to share between workers.
    """

    __slots__ = ("p", "f", "q", "modulus")

    def __init__(self, p: int, f: int, modulus: tuple[int, ...]):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if f < 1:
            raise ValueError(f"f = {f} must be positive")
        if self.q > SIZE_CAP:
            raise ValueError(f"field order {self.q} exceeds cap {SIZE_CAP}")
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if not _poly_is_irreducible(modulus, p):
            raise ValueError("modulus is reducible over GF(p)")

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, f={self.f})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.modulus))

    # -- element construction and enumeration ------------------------------

    @property
    def zero(self) -> FieldElem:
        return (0,) * self.f

    @property
    def one(self) -> FieldElem:
        return (1,) + (0,) * (self.f - 1)

    def elem(self, coeffs) -> FieldElem:
        c = tuple(x % self.p for x in coeffs)
        if len(c) != self.f:
            raise ValueError(f"expected {self.f} coefficients, got {len(c)}")
        return c

    def from_index(self, k: int) -> FieldElem:
        """Element number k in enumeration order (base-p digits of k)."""
        if not 0 <= k < self.q:
            raise ValueError(f"index {k} out of range")
        digits = []
        for _ in range(self.f):
            digits.append(k % self.p)
            k //= self.p
        return tuple(digits)

    def index_of(self, a: FieldElem) -> int:
        k = 0
        for c in reversed(a):
            k = k * self.p + c
        return k

    def elements(self) -> Iterator[FieldElem]:
        for k in range(self.q):
            yield self.from_index(k)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: FieldElem) -> FieldElem:
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        p = self.p
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        return tuple(_poly_mod(prod, self.modulus, p))

    def inv(self, a: FieldElem) -> FieldElem:
        if a == self.zero:
            raise ZeroDivisionError("inversion of zero field element")
        # a^(q-2); the multiplicative group has order q-1
        return self.pow_(a, self.q - 2)

    def pow_(self, a: FieldElem, e: int) -> FieldElem:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: FieldElem) -> FieldElem:
        """The field automorphism a -> a^p; iterating f times is the identity."""
        return self.pow_(a, self.p)

    def mult_order(self, a: FieldElem) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        order = n
        d = 2
        rem = n
        primes = []
        while d * d <= rem:
            if rem % d == 0:
                primes.append(d)
                while rem % d == 0:
                    rem //= d
            d += 1
        if rem > 1:
            primes.append(rem)
        for pr in primes:
            while order % pr == 0 and self.pow_(a, order // pr) == self.one:
                order //= pr
        return order

    def primitive_element(self) -> FieldElem:
        """First element in enumeration order generating the multiplicative group."""
        for k in range(1, self.q):
            a = self.from_index(k)
            if self.mult_order(a) == self.q - 1:
                return a
        raise AssertionError("no primitive element found")  # unreachable


@lru_cache(maxsize=None)
def field_make(p: int, f: int) -> FieldSpec:
    """Build GF(p^f) with the deterministic lowest modulus.

    Candidates x^f + c_{f-1} x^{f-1} + ... + c_0 are tried in increasing
    order of the base-p integer with digits (c_0, ..., c_{f-1}).
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if f < 1:
        raise ValueError(f"f = {f} must be positive")
    if p**f > SIZE_CAP:
        raise ValueError(f"field order {p**f} exceeds cap {SIZE_CAP}")
    if f == 1:
        return FieldSpec(p, 1, (0, 1))
    for k in range(p**f):
        digits = []
        kk = k
        for _ in range(f):
            digits.append(kk % p)
            kk //= p
        candidate = tuple(digits) + (1,)
        if candidate[0] != 0 and _poly_is_irreducible(candidate, p):
            return FieldSpec(p, f, candidate)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def field_arith(spec: FieldSpec, a: FieldElem, b, op: str) -> FieldElem:
    """Dispatch {add, mul, inv, pow}; pow takes an integer exponent as b."""
    if op == "add":
        return spec.add(a, b)
    if op == "mul":
        return spec.mul(a, b)
    if op == "inv":
        return spec.inv(a)
    if op == "pow":
        return spec.pow_(a, b)
    raise ValueError(f"unknown field operation {op!r}")


def frobenius(spec: FieldSpec, a: FieldElem) -> FieldElem:
    return spec.frobenius(a)
