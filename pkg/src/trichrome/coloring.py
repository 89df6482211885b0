"""Distinguishing 3-colorings of permutation domains.

For a faithful transitive 2-group action on 2^n points, ``color_2group``
builds three colorings f1, f2, f3 with values in {1, 2, 3} such that no
nontrivial group element preserves any of them, and the color-count
products P(f_i) = prod_x f_i(x) hit the three target values D_n(i).  The
construction recurses through a two-block system: color each half by the
kernel's restricted action, then splice the halves so that any
block-swapping element is ruled out by a product mismatch and any
block-fixing element is ruled out per half.

``solvable_coloring`` extends this to any solvable group: either color a
Sylow 2-subgroup as above, or 2-color the complement of a Gluck set of a
Hall 2'-subgroup; both branches force the color-preserver subgroup J_f to
satisfy |J_f|^2 <= |G|.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .permcore import (
    HallSearchFailed,
    PermGroup,
    action_kernel,
    hall_odd,
    is_solvable,
    is_transitive,
    is_two_group,
    orbits,
    restrict_action,
    setwise_stabilizer,
    sylow2,
    two_block_system,
)

Coloring = tuple[int, ...]  # length-n array with values in {1, 2, 3}


class ExponentPair(NamedTuple):
    """The product of a coloring's values, tracked as 2^a * 3^b."""

    a: int
    b: int

    def __mul__(self, other: "ExponentPair") -> "ExponentPair":  # type: ignore[override]
        return ExponentPair(self.a + other.a, self.b + other.b)

    def value(self) -> int:
        return 2**self.a * 3**self.b

    def compare(self, other: "ExponentPair") -> int:
        """Exact integer comparison of 2^a 3^b values (-1, 0, or +1).

        Cancels the common power of each prime first, so only the
        exponent deltas are ever exponentiated.
        """
        da, db = self.a - other.a, self.b - other.b
        lhs = 2 ** max(da, 0) * 3 ** max(db, 0)
        rhs = 2 ** max(-da, 0) * 3 ** max(-db, 0)
        return (lhs > rhs) - (lhs < rhs)


def validate_coloring(f: Coloring, degree: int) -> None:
    if len(f) != degree:
        raise ValueError(f"coloring has {len(f)} entries, expected {degree}")
    if any(c not in (1, 2, 3) for c in f):
        raise ValueError("coloring values must lie in {1, 2, 3}")


def exponent_pair(f: Coloring) -> ExponentPair:
    return ExponentPair(sum(1 for c in f if c == 2), sum(1 for c in f if c == 3))


def d_values(n: int) -> tuple[ExponentPair, ExponentPair, ExponentPair]:
    """(D_n(1), D_n(2), D_n(3)) as exponent pairs.

    D_0(i) = i and each next level multiplies pairs:
    D_{n+1} = (D_n(1)D_n(2), D_n(1)D_n(3), D_n(2)D_n(3)).
    The integer values satisfy D_n(1) < D_n(2) < D_n(3).
    """
    if n < 0:
        raise ValueError("level must be nonnegative")
    d1, d2, d3 = ExponentPair(0, 0), ExponentPair(1, 0), ExponentPair(0, 1)
    for _ in range(n):
        d1, d2, d3 = d1 * d2, d1 * d3, d2 * d3
    return d1, d2, d3


def color_preservers(G: PermGroup, f: Coloring) -> PermGroup:
    """J_f = {g in G : f(g(x)) = f(x) for all x}, by element filter."""
    validate_coloring(f, G.degree)
    kept = []
    for g in G.elements():
        if all(f[img] == f[x] for x, img in enumerate(g)):
            kept.append(g)
    return PermGroup.from_elements(G.degree, kept)


def color_2group(G: PermGroup) -> tuple[Coloring, Coloring, Coloring]:
    """Three distinguishing colorings of a faithful transitive 2-group action.

    Output colorings f1, f2, f3 satisfy P(f_i) = D_n(i) where the degree
    is 2^n, and each has trivial color-preserver subgroup in G.  Blocks
    are always ordered by their minimum point, so output is reproducible
    byte for byte.
    """
    if not is_two_group(G):
        raise ValueError("color_2group requires a 2-group")
    if not is_transitive(G):
        raise ValueError("color_2group requires a transitive action")
    n = G.degree
    if n == 1:
        return ((1,), (2,), (3,))

    system = two_block_system(G)
    delta1, delta2 = system.blocks  # ordered by minimum point
    H = action_kernel(G, system)
    sub1 = restrict_action(H, delta1)
    sub2 = restrict_action(H, delta2)
    f11, f21, _f31 = color_2group(sub1)
    _f12, f22, f32 = color_2group(sub2)

    def splice(left: Coloring, right: Coloring) -> Coloring:
        out = [0] * n
        for i, x in enumerate(delta1):
            out[x] = left[i]
        for i, x in enumerate(delta2):
            out[x] = right[i]
        return tuple(out)

    return (splice(f11, f22), splice(f11, f32), splice(f21, f32))


def color_2group_any(G: PermGroup) -> Coloring:
    """One distinguishing coloring for a possibly intransitive 2-group.

    Applies color_2group per orbit (through the restricted action) and
    takes each orbit's first coloring; a color-preserving element then
    acts trivially on every orbit, hence is the identity.
    """
    if not is_two_group(G):
        raise ValueError("color_2group_any requires a 2-group")
    out = [0] * G.degree
    for orbit in orbits(G):
        pts = sorted(orbit)
        f1, _, _ = color_2group(restrict_action(G, pts))
        for i, x in enumerate(pts):
            out[x] = f1[i]
    return tuple(out)


def gluck_set(G: PermGroup) -> frozenset:
    """A subset of the domain with trivial setwise stabilizer in G.

    Requires |G| odd (and the action faithful, which permutation groups
    are by construction); existence is then guaranteed.  Searches subsets
    by ascending size, then lexicographically, so output is deterministic.
    """
    if G.order() % 2 == 0:
        raise ValueError("gluck_set requires a group of odd order")
    n = G.degree
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            if setwise_stabilizer(G, subset).is_trivial():
                return frozenset(subset)
    raise ValueError("no subset with trivial stabilizer; preconditions violated")


def _sorted_color_classes(f: Coloring) -> Coloring:
    """Rename colors so class sizes are weakly decreasing, stable on ties."""
    sizes = {c: sum(1 for x in f if x == c) for c in (1, 2, 3)}
    ranked = sorted((1, 2, 3), key=lambda c: (-sizes[c], c))
    rename = {old: new + 1 for new, old in enumerate(ranked)}
    return tuple(rename[c] for c in f)


def solvable_coloring(G: PermGroup) -> tuple[Coloring, PermGroup]:
    """A coloring f of a solvable group's domain with |J_f|^2 <= |G|.

    Branches on which half dominates: if the Sylow 2-subgroup is at least
    as large as the odd part, color it with color_2group_any; otherwise
    2-color the domain by membership in a Gluck set of a Hall
    2'-subgroup.  Color classes are finally renamed so their sizes are
    weakly decreasing.  Returns (f, J_f).

    If the Hall search exhausts its budget, retries with the largest
    odd-order subgroup Q found: the guarantee weakens to |J_f| <= |G|/|Q|
    and the function errors only if the square-root contract is lost.
    """
    if not is_solvable(G):
        raise ValueError("solvable_coloring requires a solvable group")
    order = G.order()
    two_part = order & (-order)
    odd_part = order // two_part

    if two_part >= odd_part:
        P = sylow2(G)
        f = color_2group_any(P)
    else:
        try:
            Q = hall_odd(G)
        except HallSearchFailed as exc:
            if exc.best_elements is None:
                raise
            Q = PermGroup(G.degree, exc.best_gens, _elements=exc.best_elements)
        S = gluck_set(Q)
        f = tuple(1 if x in S else 2 for x in range(G.degree))

    f = _sorted_color_classes(f)
    J = color_preservers(G, f)
    if J.order() ** 2 > order:
        raise ValueError(
            f"coloring contract lost: |J_f| = {J.order()} with |G| = {order}"
        )
    return f, J
