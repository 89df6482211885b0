"""S(G): the largest order of a solvable subgroup, by cyclic extension.

The search maintains a set of discovered solvable subgroups, seeded with
the trivial group, and repeatedly extends each subgroup H by an element g
of the normalizer N_G(H) whose order modulo H is prime.  Such an
extension <H, g> = H u Hg u ... u Hg^(p-1) is solvable by construction
(H is normal in it with cyclic prime quotient), and every solvable
subgroup of G arises along some such chain, so the maximum order over
everything discovered is exact once the search completes.

Subgroups are deduplicated up to conjugacy: each newly discovered
subgroup has its full conjugation orbit digested (a digest is a 128-bit
hash of the sorted element set), and only one representative per orbit is
ever extended.  Conjugate subgroups have equal order and conjugate
normalizers, so this loses nothing; it is what makes groups like Sym(8)
(151221 subgroups, ~300 classes) tractable.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass

from .constructors import direct_product, pgammal2
from .permcore import (
    PermGroup,
    closure,
    compose,
    conjugate,
    identity_perm,
    is_identity,
    is_solvable,
)

DEFAULT_CLASS_BUDGET = 200_000


@dataclass
class SolvableSearchResult:
    """Outcome of an S(G) search.

    ``witness`` generates a solvable subgroup of order exactly
    ``s_value``; ``subgroups_visited`` counts every solvable subgroup the
    orbit enumeration touched (all conjugates included).  When
    ``budget_hit`` is true the search stopped early and s_value is only a
    lower bound.
    """

    s_value: int
    witness: tuple
    subgroups_visited: int
    classes_expanded: int
    budget_hit: bool


def _digest(elements) -> bytes:
    first = next(iter(elements))
    if isinstance(first, bytes):
        return hashlib.md5(b"|".join(sorted(elements))).digest()
    joined = ";".join(",".join(map(str, e)) for e in sorted(elements))
    return hashlib.md5(joined.encode()).digest()


def _first_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def s_max(G: PermGroup, budget: int = DEFAULT_CLASS_BUDGET) -> SolvableSearchResult:
    """Exact S(G) by the cyclic-extension subgroup search.

    ``budget`` caps the number of subgroup classes expanded; exceeding it
    marks the result budget_hit (s_value then only a lower bound).
    """
    els = G.sorted_elements()
    order = G.order()
    ident = identity_perm(G.degree)

    if is_solvable(G):
        # G itself attains the maximum; the search would only rediscover it
        return SolvableSearchResult(order, tuple(G.generators), 1, 0, False)

    gens = G.generators

    # class records: (order, element frozenset, generator tuple)
    seen_digests: set[bytes] = set()
    trivial = frozenset({ident})
    seen_digests.add(_digest(trivial))
    queue: deque = deque([(1, trivial, ())])
    best_order, best_gens = 1, ()
    visited = 1
    expanded = 0
    budget_hit = False

    while queue:
        if expanded >= budget:
            budget_hit = True
            break
        h_order, h_set, h_gens = queue.popleft()
        expanded += 1

        # normalizer scan: g normalizes H iff it conjugates H's generators into H
        if h_gens:
            normalizer = []
            for g in els:
                for s in h_gens:
                    if conjugate(g, s) not in h_set:
                        break
                else:
                    normalizer.append(g)
        else:
            normalizer = els

        local: set[bytes] = set()
        for g in normalizer:
            if g in h_set:
                continue
            # order of g modulo H
            e = 1
            m = g
            while m not in h_set:
                m = compose(m, g)
                e += 1
            if e != _first_prime_factor(e):
                continue
            # <H, g> = H u Hg u ... u Hg^(e-1), exactly e * |H| elements
            new_els = set(h_set)
            coset_rep = g
            for _ in range(e - 1):
                new_els.update(compose(h, coset_rep) for h in h_set)
                coset_rep = compose(coset_rep, g)
            new_set = frozenset(new_els)
            dig = _digest(new_set)
            if dig in local or dig in seen_digests:
                continue
            local.add(dig)

            # conjugation orbit of the new subgroup: digest every member
            orbit = {dig: new_set}
            frontier = [new_set]
            while frontier:
                member = frontier.pop()
                for gg in gens:
                    image = frozenset(conjugate(gg, k) for k in member)
                    d2 = _digest(image)
                    if d2 not in orbit:
                        orbit[d2] = image
                        frontier.append(image)
            seen_digests.update(orbit)
            visited += len(orbit)

            new_order = e * h_order
            new_gens = h_gens + (g,)
            if new_order > best_order:
                best_order, best_gens = new_order, new_gens
            queue.append((new_order, new_set, new_gens))

    if not best_gens and best_order == 1:
        best_gens = ()
    assert order % best_order == 0
    return SolvableSearchResult(best_order, tuple(best_gens), visited, expanded, budget_hit)


def s_aut_psl2(q: int, budget: int = DEFAULT_CLASS_BUDGET) -> int:
    """S(PGammaL2(q)), i.e. the solvable bound for the full automorphism group."""
    return s_max(pgammal2(q), budget).s_value


def s_product_check(A: PermGroup, B: PermGroup, budget: int = DEFAULT_CLASS_BUDGET) -> bool:
    """Verify S(A x B) = S(A) * S(B).

    <= is the product decomposition of a solvable subgroup; >= holds
    because a direct product of solvable subgroups is solvable.
    """
    sa = s_max(A, budget)
    sb = s_max(B, budget)
    sab = s_max(direct_product(A, B), budget)
    if sa.budget_hit or sb.budget_hit or sab.budget_hit:
        raise RuntimeError("s_product_check hit a search budget; result unreliable")
    return sab.s_value == sa.s_value * sb.s_value


# ---------------------------------------------------------------------------
# brute-force oracles (for tests and selftest only)


def _cyclic_representatives(G: PermGroup) -> list:
    """One generator per distinct cyclic subgroup of G."""
    seen: set[frozenset] = set()
    reps = []
    for g in G.sorted_elements():
        if is_identity(g):
            continue
        sub = closure([g])
        if sub not in seen:
            seen.add(sub)
            reps.append(g)
    return reps


def s_max_bruteforce(G: PermGroup) -> int:
    """Independent oracle: max order over solvable subgroups generated by
    up to three elements (equivalently, by up to three cyclic-subgroup
    representatives).  Intended for groups of order <= 400 whose maximal
    solvable subgroups are at most 3-generated."""
    reps = _cyclic_representatives(G)
    best = 1
    seen: set[frozenset] = set()
    pair_subgroups: list[tuple[frozenset, tuple]] = []
    for i, a in enumerate(reps):
        for b in reps[i:]:
            els = closure([a, b])
            if els in seen:
                continue
            seen.add(els)
            pair_subgroups.append((els, (a, b)))
            H = PermGroup(G.degree, (a, b), _elements=els)
            if len(els) > best and is_solvable(H):
                best = len(els)
    for els, gens in pair_subgroups:
        for c in reps:
            if c in els:
                continue
            new_els = closure(list(gens) + [c])
            if new_els in seen:
                continue
            seen.add(new_els)
            H = PermGroup(G.degree, gens + (c,), _elements=new_els)
            if len(new_els) > best and is_solvable(H):
                best = len(new_els)
    return best


def m_max_bruteforce(G: PermGroup) -> int:
    """Tiny oracle: largest proper subgroup order found from pairs of
    cyclic-subgroup representatives (groups of order <= 2000 whose largest
    maximal subgroup is 2-generated)."""
    order = G.order()
    reps = _cyclic_representatives(G)
    best = 1
    seen: set[frozenset] = set()
    for i, a in enumerate(reps):
        for b in reps[i:]:
            els = closure([a, b])
            if els in seen:
                continue
            seen.add(els)
            if best < len(els) < order:
                best = len(els)
    return best
