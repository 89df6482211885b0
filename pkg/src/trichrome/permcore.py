"""The permutation-group engine.

Permutations are image arrays on the points 0..n-1, stored as ``bytes``
for degree <= 256 and as tuples of ints above that.  Both forms index,
hash, compare and sort identically, so a group always uses one form
consistently.  Groups are generators plus a lazily materialized element
set; every query below works by explicit enumeration, which is exact and
obviously correct at the scales this package targets (default budget
10**6 elements).
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Sequence

DEFAULT_BUDGET = 10**6

Perm = Sequence[int]  # bytes or tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its element budget."""


class HallSearchFailed(RuntimeError):
    """Raised when the bounded odd-Hall search exhausts its budget.

    Carries the largest odd-order subgroup found so far (element set and
    generators) so callers can fall back to it.
    """

    def __init__(self, message: str, best_elements=None, best_gens=()):
        super().__init__(message)
        self.best_elements = best_elements
        self.best_gens = tuple(best_gens)


# ---------------------------------------------------------------------------
# permutation primitives


def pack_images(images: Iterable[int], degree: int) -> Perm:
    imgs = tuple(images)
    if len(imgs) != degree:
        raise ValueError(f"expected {degree} images, got {len(imgs)}")
    if sorted(imgs) != list(range(degree)):
        raise ValueError("images are not a bijection on 0..n-1")
    return bytes(imgs) if degree <= 256 else imgs


def identity_perm(degree: int) -> Perm:
    return pack_images(range(degree), degree)


def compose(g: Perm, h: Perm) -> Perm:
    """g after h: (g*h)(x) = g(h(x))."""
    return type(g)(map(g.__getitem__, h))


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, img in enumerate(g):
        out[img] = i
    return bytes(out) if isinstance(g, bytes) else tuple(out)


def conjugate(g: Perm, h: Perm) -> Perm:
    """g h g^-1, the relabeling of h along g."""
    out = [0] * len(g)
    for i, img in enumerate(h):
        out[g[i]] = g[img]
    return bytes(out) if isinstance(g, bytes) else tuple(out)


def is_identity(g: Perm) -> bool:
    return all(img == i for i, img in enumerate(g))


def perm_order(g: Perm) -> int:
    # lcm of cycle lengths
    import math

    n = len(g)
    seen = [False] * n
    order = 1
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                length += 1
            order = math.lcm(order, length)
    return order


def cycle_type(g: Perm) -> tuple[int, ...]:
    n = len(g)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def perm_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> Perm:
    images = list(range(degree))
    for cyc in cycles:
        for k in range(len(cyc)):
            images[cyc[k]] = cyc[(k + 1) % len(cyc)]
    return pack_images(images, degree)


# ---------------------------------------------------------------------------
# groups


def closure(generators: Sequence[Perm], budget: int = DEFAULT_BUDGET) -> frozenset:
    """Breadth-first product closure of the generators.

    Raises BudgetExceeded once the element count would pass the budget,
    which signals the group is too large for desk-scale enumeration.
    """
    if not generators:
        raise ValueError("closure needs at least the degree; use PermGroup for empty gens")
    degree = len(generators[0])
    if any(len(g) != degree for g in generators):
        raise ValueError("generators have inconsistent degrees")
    ident = identity_perm(degree)
    els = {ident}
    frontier = [g for g in generators if g != ident]
    els.update(frontier)
    if len(els) > budget:
        raise BudgetExceeded(f"closure exceeded budget {budget}")
    while frontier:
        new = []
        for b in frontier:
            for a in generators:
                c = compose(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
        if len(els) > budget:
            raise BudgetExceeded(f"closure exceeded budget {budget}")
        frontier = new
    return frozenset(els)


class PermGroup:
    """A permutation group on 0..n-1, given by generators.

    Immutable once the element set is materialized; all query operations
    are read-only, so instances can be shared freely between workers.
    """

    __slots__ = ("degree", "generators", "_elements", "_order")

    def __init__(self, degree: int, generators: Sequence[Perm] = (), *, _elements=None):
        gens = []
        seen = set()
        for g in generators:
            g = pack_images(g, degree)  # canonicalize: bytes iff degree <= 256
            if not is_identity(g) and g not in seen:
                seen.add(g)
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._elements = frozenset(_elements) if _elements is not None else None
        self._order = len(self._elements) if _elements is not None else None

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm]) -> "PermGroup":
        els = frozenset(elements)
        gens = small_generating_set(els, degree)
        return cls(degree, gens, _elements=els)

    def elements(self, budget: int = DEFAULT_BUDGET) -> frozenset:
        if self._elements is None:
            if self.generators:
                self._elements = closure(self.generators, budget)
            else:
                self._elements = frozenset({identity_perm(self.degree)})
            self._order = len(self._elements)
        return self._elements

    def order(self, budget: int = DEFAULT_BUDGET) -> int:
        if self._order is None:
            self.elements(budget)
        return self._order

    def __contains__(self, g: Perm) -> bool:
        return g in self.elements()

    def is_trivial(self) -> bool:
        return self.order() == 1

    def identity(self) -> Perm:
        return identity_perm(self.degree)

    def sorted_elements(self) -> list:
        return sorted(self.elements())

    def subgroup_from_elements(self, elements: Iterable[Perm]) -> "PermGroup":
        return PermGroup.from_elements(self.degree, elements)

    def __repr__(self) -> str:
        size = self._order if self._order is not None else "?"
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)}, order={size})"


def small_generating_set(elements: frozenset, degree: int) -> tuple:
    """Greedy generating set for a materialized subgroup (deterministic)."""
    ident = identity_perm(degree)
    if len(elements) == 1:
        return ()
    gens: list = []
    have = {ident}
    # largest element order first cuts the generator count; ties by array
    for g in sorted(elements, key=lambda x: (-perm_order(x), x)):
        if g in have:
            continue
        gens.append(g)
        have = set(closure(gens))
        if len(have) == len(elements):
            break
    return tuple(gens)


# ---------------------------------------------------------------------------
# orbits and blocks


def orbits(G: PermGroup) -> list[frozenset]:
    """Partition of the points into G-orbits, sorted by minimum point."""
    n = G.degree
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = {start}
        queue = deque([start])
        seen[start] = True
        while queue:
            x = queue.popleft()
            for g in G.generators:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orb.add(y)
                    queue.append(y)
        out.append(frozenset(orb))
    return out


def is_transitive(G: PermGroup) -> bool:
    return len(orbits(G)) == 1 and G.degree >= 1


class BlockSystem:
    """A G-invariant partition of the points.

    Validates the block axioms against the given generators: blocks are
    nonempty, disjoint, cover all points, and every generator maps each
    block onto a block.
    """

    __slots__ = ("blocks", "block_of")

    def __init__(self, blocks: Sequence[Iterable[int]], degree: int, generators: Sequence[Perm] = ()):
        blocks = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        covered: dict[int, int] = {}
        for idx, b in enumerate(blocks):
            if not b:
                raise ValueError("empty block")
            for x in b:
                if x in covered:
                    raise ValueError("blocks are not disjoint")
                covered[x] = idx
        if len(covered) != degree:
            raise ValueError("blocks do not cover all points")
        for g in generators:
            for b in blocks:
                image = frozenset(g[x] for x in b)
                target = blocks[covered[next(iter(image))]]
                if image != frozenset(target):
                    raise ValueError("a generator does not permute the blocks")
        self.blocks = tuple(blocks)
        self.block_of = covered

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return f"BlockSystem({[list(b) for b in self.blocks]})"


def minimal_block(G: PermGroup, a: int, b: int) -> frozenset:
    """Smallest block of the transitive group G containing {a, b}.

    Classical union-find merge: repeatedly force images of merged pairs
    to be merged too.  Returns the full point set when {a, b} lies in no
    proper block.
    """
    if not is_transitive(G):
        raise ValueError("minimal_block requires a transitive group")
    if a == b:
        raise ValueError("need two distinct points")
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return True

    queue = deque()
    union(a, b)
    queue.append((a, b))
    while queue:
        x, y = queue.popleft()
        for g in G.generators:
            if union(g[x], g[y]):
                queue.append((g[x], g[y]))
    root = find(a)
    return frozenset(x for x in range(n) if find(x) == root)


def block_system_from_block(G: PermGroup, block: frozenset) -> BlockSystem:
    """All G-translates of a block, as a validated block system."""
    seen = {block}
    queue = deque([block])
    while queue:
        cur = queue.popleft()
        for g in G.generators:
            img = frozenset(g[x] for x in cur)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return BlockSystem(seen, G.degree, G.generators)


def quotient_action(G: PermGroup, system: BlockSystem) -> PermGroup:
    """Image of G acting on the blocks (blocks numbered by minimum point)."""
    gens = []
    k = len(system.blocks)
    for g in G.generators:
        images = [0] * k
        for idx, blk in enumerate(system.blocks):
            images[idx] = system.block_of[g[blk[0]]]
        gens.append(pack_images(images, k))
    return PermGroup(k, gens)


def is_two_group(G: PermGroup, budget: int = DEFAULT_BUDGET) -> bool:
    n = G.order(budget)
    return n & (n - 1) == 0


def two_block_system(G: PermGroup) -> BlockSystem:
    """A block system with exactly two blocks of size n/2, for a transitive 2-group.

    Realized bottom-up: take a minimal nontrivial block system, pass to the
    quotient action on blocks (again a transitive 2-group, smaller degree),
    recurse, and pull the two quotient blocks back as unions of blocks.
    """
    if not is_two_group(G):
        raise ValueError("two_block_system requires a 2-group")
    if not is_transitive(G):
        raise ValueError("two_block_system requires a transitive group")
    n = G.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    if n == 2:
        return BlockSystem([(0,), (1,)], 2, G.generators)

    best: frozenset | None = None
    for b in range(1, n):
        blk = minimal_block(G, 0, b)
        if 1 < len(blk) < n and (best is None or len(blk) < len(best)):
            best = blk
    if best is None:
        # a transitive 2-group of degree >= 4 is never primitive
        raise ValueError("no proper block found; group is not a 2-group action")
    system = block_system_from_block(G, best)
    quotient = quotient_action(G, system)
    upper = two_block_system(quotient)
    halves = []
    for upper_block in upper.blocks:
        pts: set[int] = set()
        for idx in upper_block:
            pts.update(system.blocks[idx])
        halves.append(pts)
    return BlockSystem(halves, n, G.generators)


def action_kernel(G: PermGroup, system: BlockSystem) -> PermGroup:
    """Subgroup of elements fixing every block setwise."""
    blocks = [frozenset(b) for b in system.blocks]
    for g in G.generators:
        for b in blocks:
            img = frozenset(g[x] for x in b)
            if img not in blocks:
                raise ValueError("block system is not G-invariant")
    kernel = []
    for g in G.elements():
        if all(frozenset(g[x] for x in b) == b for b in blocks):
            kernel.append(g)
    return PermGroup.from_elements(G.degree, kernel)


def restrict_action(G: PermGroup, delta: Iterable[int]) -> PermGroup:
    """Image of G on the invariant set delta, relabeled to 0..|delta|-1.

    The relabeling is by ascending point order, i.e. sorted(delta)[i] -> i.
    This is G modulo the pointwise stabilizer of delta.
    """
    pts = sorted(set(delta))
    pos = {x: i for i, x in enumerate(pts)}
    m = len(pts)
    gens = []
    for g in G.generators:
        try:
            images = [pos[g[x]] for x in pts]
        except KeyError:
            raise ValueError("delta is not G-invariant") from None
        gens.append(pack_images(images, m))
    return PermGroup(m, gens)


# ---------------------------------------------------------------------------
# solvability machinery


def normal_closure(G: PermGroup, seeds: Sequence[Perm], budget: int = DEFAULT_BUDGET) -> frozenset:
    """Smallest subgroup containing the seeds and normalized by G.

    Every appended generator has all its conjugates (by G's generators)
    enqueued, so on termination the result is conjugation-closed.
    """
    ident = identity_perm(G.degree)
    els = {ident}
    gens: list[Perm] = []
    queue = deque(s for s in seeds if not is_identity(s))
    while queue:
        s = queue.popleft()
        if s in els:
            continue
        gens.append(s)
        els = set(closure(gens, budget))
        for g in G.generators:
            queue.append(conjugate(g, s))
    return frozenset(els)


def derived_subgroup(G: PermGroup, budget: int = DEFAULT_BUDGET) -> PermGroup:
    """Commutator subgroup: normal closure of generator commutators."""
    comms = []
    gens = G.generators
    for i, a in enumerate(gens):
        ai = inverse(a)
        for b in gens[i + 1 :]:
            comms.append(compose(compose(a, b), compose(ai, inverse(b))))
    if not comms:
        return PermGroup(G.degree)
    els = normal_closure(G, comms, budget)
    return PermGroup.from_elements(G.degree, els)


def derived_series(G: PermGroup, budget: int = DEFAULT_BUDGET) -> list[PermGroup]:
    """G > G' > G'' > ... until the series stabilizes."""
    series = [G]
    current = G
    while True:
        nxt = derived_subgroup(current, budget)
        if nxt.order(budget) == current.order(budget):
            break
        series.append(nxt)
        current = nxt
        if current.is_trivial():
            break
    return series


def is_solvable(G: PermGroup, budget: int = DEFAULT_BUDGET) -> bool:
    return derived_series(G, budget)[-1].is_trivial()


def _two_part(n: int) -> int:
    return n & (-n)


def sylow2(G: PermGroup, budget: int = DEFAULT_BUDGET) -> PermGroup:
    """A Sylow 2-subgroup, by normalizer climbing.

    Start from a maximal-order 2-element and repeatedly extend P by a
    2-element g of N_G(P) with g^2 in P; Sylow theory guarantees such an
    extension exists until |P| reaches the full 2-part of |G|.
    """
    els = G.sorted_elements()
    target = _two_part(G.order(budget))
    if target == 1:
        return PermGroup(G.degree)
    two_elements = [g for g in els if perm_order(g) & (perm_order(g) - 1) == 0 and not is_identity(g)]
    seed = min(two_elements, key=lambda g: (-perm_order(g), g))
    p_gens = [seed]
    p_set = set(closure(p_gens, budget))
    while len(p_set) < target:
        extended = False
        for g in two_elements:
            if g in p_set:
                continue
            if compose(g, g) not in p_set:
                continue
            gi = inverse(g)
            if all(compose(compose(g, s), gi) in p_set for s in p_gens):
                coset = [compose(h, g) for h in p_set]
                p_set.update(coset)
                p_gens.append(g)
                extended = True
                break
        if not extended:
            raise AssertionError("Sylow climb stalled")  # unreachable by Sylow theory
    return PermGroup(G.degree, tuple(p_gens), _elements=p_set)


def hall_odd(G: PermGroup, budget: int = 4000) -> PermGroup:
    """A Hall 2'-subgroup of a solvable group: order = odd part of |G|.

    Bounded search over closures of sets of odd-order elements, largest
    candidate first.  The budget counts closures; on exhaustion raises
    HallSearchFailed (callers may fall back to the best subgroup found, so
    the failure carries it).
    """
    order = G.order()
    odd_part = order // _two_part(order)
    if odd_part == 1:
        return PermGroup(G.degree)
    if not is_solvable(G):
        raise ValueError("hall_odd requires a solvable group")
    if odd_part == order:
        return G

    odd_els = sorted(
        (g for g in G.elements() if perm_order(g) % 2 == 1 and not is_identity(g)),
        key=lambda g: (-perm_order(g), g),
    )
    # heap of (-order, gens, element set); dedup by element set
    seen: set[frozenset] = set()
    heap: list = []
    counter = 0
    spent = 0
    best: tuple[frozenset, tuple] | None = None

    def push(els: frozenset, gens: tuple):
        nonlocal counter, best
        if els in seen:
            return
        seen.add(els)
        if best is None or len(els) > len(best[0]):
            best = (els, gens)
        counter += 1
        heapq.heappush(heap, (-len(els), counter, gens, els))

    for g in odd_els:
        els = closure([g])
        if len(els) == odd_part:
            return PermGroup(G.degree, (g,), _elements=els)
        push(els, (g,))

    while heap:
        _neg_order, _, gens, els = heapq.heappop(heap)
        for g in odd_els:
            if g in els:
                continue
            if spent >= budget:
                raise HallSearchFailed(
                    f"odd-Hall search budget {budget} exhausted; best order "
                    f"{len(best[0]) if best else 1}",
                    best_elements=best[0] if best else None,
                    best_gens=best[1] if best else (),
                )
            spent += 1
            try:
                new_els = closure(list(gens) + [g], DEFAULT_BUDGET)
            except BudgetExceeded:
                continue
            if len(new_els) % 2 == 1 and len(new_els) <= odd_part:
                if len(new_els) == odd_part:
                    return PermGroup(G.degree, tuple(gens) + (g,), _elements=new_els)
                push(frozenset(new_els), tuple(gens) + (g,))
    raise HallSearchFailed(
        "odd-Hall search space exhausted without reaching the odd part",
        best_elements=best[0] if best else None,
        best_gens=best[1] if best else (),
    )


def conjugacy_class_count(G: PermGroup, budget: int = DEFAULT_BUDGET) -> int:
    """Number of conjugacy classes, by orbit counting under conjugation."""
    els = G.elements(budget)
    remaining = set(els)
    gens = G.generators
    count = 0
    while remaining:
        x = remaining.pop()
        count += 1
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in gens:
                z = conjugate(g, y)
                if z in remaining:
                    remaining.remove(z)
                    queue.append(z)
    return count


def setwise_stabilizer(G: PermGroup, points: Iterable[int]) -> PermGroup:
    """{g in G : g(S) = S}, by element filter."""
    S = frozenset(points)
    kept = [g for g in G.elements() if frozenset(g[x] for x in S) == S]
    return PermGroup.from_elements(G.degree, kept)


def normalizer_elements(G: PermGroup, sub_gens: Sequence[Perm], sub_set: frozenset) -> list:
    """Elements of G normalizing the subgroup given by (gens, element set)."""
    out = []
    for g in G.elements():
        gi = inverse(g)
        if all(compose(compose(g, s), gi) in sub_set for s in sub_gens):
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# generator file format


def parse_generator_file(text: str) -> PermGroup:
    """Parse the generator file format.

    Line 1 is the degree n; each later non-comment line is one generator
    as n space-separated 0-based images.  '#' starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty generator file")
    try:
        degree = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the degree, got {lines[0]!r}") from None
    if degree < 1:
        raise ValueError("degree must be positive")
    gens = []
    for line in lines[1:]:
        parts = line.split()
        try:
            images = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad generator line {line!r}") from None
        gens.append(pack_images(images, degree))
    return PermGroup(degree, gens)
