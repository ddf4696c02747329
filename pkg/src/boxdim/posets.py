"""Finite posets, linear extensions, realizers, and the exact dimension solver.

Elements are the integers 1..n.  A strict relation pair (u, v) means u < v;
relations are stored irreflexively and must be transitively closed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property

from .limits import DEFAULT_LIMITS, check_limit

LinearExtension = tuple[int, ...]


@dataclass(frozen=True)
class Poset:
    """A partial order on ground set 1..n given by its strict pairs."""

    n: int
    relation: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("poset needs at least one element")
        succ: dict[int, set[int]] = {}
        for pair in self.relation:
            u, v = pair
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"relation pair {pair} out of range 1..{self.n}")
            if u == v:
                raise ValueError(f"reflexive pair {pair} must not be stored")
            if (v, u) in self.relation:
                raise ValueError(f"antisymmetry violated by ({u},{v}) and ({v},{u})")
            succ.setdefault(u, set()).add(v)
        for u, ups in succ.items():
            for v in ups:
                for w in succ.get(v, ()):
                    if (u, w) not in self.relation:
                        raise ValueError(
                            f"not transitively closed: ({u},{v}) and ({v},{w}) "
                            f"without ({u},{w})")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Poset":
        """Build a poset as the transitive closure of arbitrary strict pairs."""
        succ = [set() for _ in range(n + 1)]
        for u, v in pairs:
            if u != v:
                succ[u].add(v)
        changed = True
        while changed:
            changed = False
            for u in range(1, n + 1):
                extra = set()
                for v in succ[u]:
                    extra |= succ[v]
                extra -= succ[u]
                if extra:
                    succ[u] |= extra
                    changed = True
        rel = set()
        for u in range(1, n + 1):
            if u in succ[u]:
                raise ValueError(f"pairs are cyclic at element {u}")
            for v in succ[u]:
                rel.add((u, v))
        return cls(n, frozenset(rel))

    @cached_property
    def _succ(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.relation:
            out[u].add(v)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def _pred(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.relation:
            out[v].add(u)
        return {v: frozenset(s) for v, s in out.items()}

    def less(self, u: int, v: int) -> bool:
        return (u, v) in self.relation

    def comparable(self, u: int, v: int) -> bool:
        return (u, v) in self.relation or (v, u) in self.relation

    def is_chain(self) -> bool:
        return all(self.comparable(u, v)
                   for u in range(1, self.n + 1)
                   for v in range(u + 1, self.n + 1))

    def is_antichain(self) -> bool:
        return not self.relation

    def incomparable_ordered_pairs(self) -> list[tuple[int, int]]:
        """All ordered pairs (u, v), u != v, with u and v incomparable."""
        return [(u, v)
                for u in range(1, self.n + 1)
                for v in range(1, self.n + 1)
                if u != v and not self.comparable(u, v)]

    def dual(self) -> "Poset":
        return Poset(self.n, frozenset((v, u) for u, v in self.relation))


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 1..n; no loops."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for a in self.arcs:
            u, v = a
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc {a} out of range 1..{self.n}")
            if u == v:
                raise ValueError(f"loop {a} not allowed")


def topological_sort(d: Digraph) -> LinearExtension | None:
    """Total order compatible with all arcs, or None if the digraph is cyclic.

    Deterministic: among currently available vertices the smallest index is
    emitted first.
    """
    indeg = {v: 0 for v in range(1, d.n + 1)}
    out: dict[int, list[int]] = {v: [] for v in range(1, d.n + 1)}
    for u, v in d.arcs:
        indeg[v] += 1
        out[u].append(v)
    heap = [v for v in range(1, d.n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != d.n:
        return None
    return tuple(order)


def find_directed_cycle(d: Digraph) -> list[int] | None:
    """Return the vertices of some directed cycle, or None (iterative DFS)."""
    out: dict[int, list[int]] = {v: [] for v in range(1, d.n + 1)}
    for u, v in sorted(d.arcs):
        out[u].append(v)
    color = {v: 0 for v in range(1, d.n + 1)}  # 0 new, 1 active, 2 done
    parent: dict[int, int] = {}
    for root in range(1, d.n + 1):
        if color[root]:
            continue
        stack = [(root, iter(out[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, iter(out[w])))
                    advanced = True
                    break
                if color[w] == 1:
                    cycle = [v]
                    x = v
                    while x != w:
                        x = parent[x]
                        cycle.append(x)
                    cycle.reverse()
                    return cycle
            if not advanced:
                color[v] = 2
                stack.pop()
    return None


def _check_ground_set(n: int, seq: LinearExtension) -> None:
    if len(seq) != n or sorted(seq) != list(range(1, n + 1)):
        raise ValueError(f"sequence {seq} is not a permutation of 1..{n}")


def is_linear_extension(p: Poset, order: LinearExtension) -> bool:
    """True iff every strict pair of ``p`` is respected by ``order``."""
    _check_ground_set(p.n, order)
    pos = {v: i for i, v in enumerate(order)}
    return all(pos[u] < pos[v] for u, v in p.relation)


def intersection_of_extensions(orders) -> Poset:
    """Poset with u < v exactly when u precedes v in every given total order."""
    orders = list(orders)
    if not orders:
        raise ValueError("need at least one total order")
    n = len(orders[0])
    positions = []
    for order in orders:
        _check_ground_set(n, tuple(order))
        positions.append({v: i for i, v in enumerate(order)})
    rel = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and all(pos[u] < pos[v] for pos in positions):
                rel.add((u, v))
    return Poset(n, frozenset(rel))


@dataclass(frozen=True)
class Realizer:
    """A non-empty set of linear extensions, kept in a fixed order."""

    extensions: tuple[LinearExtension, ...]

    def __post_init__(self) -> None:
        if not self.extensions:
            raise ValueError("realizer must contain at least one extension")
        n = len(self.extensions[0])
        for ext in self.extensions:
            _check_ground_set(n, ext)

    @property
    def n(self) -> int:
        return len(self.extensions[0])

    def __len__(self) -> int:
        return len(self.extensions)


def verify_realizer(p: Poset, r: Realizer) -> bool:
    """True iff every member extends ``p`` and their intersection equals ``p``."""
    if r.n != p.n:
        raise ValueError(f"ground sets differ: poset on {p.n}, realizer on {r.n}")
    if not all(is_linear_extension(p, ext) for ext in r.extensions):
        return False
    return intersection_of_extensions(r.extensions) == p


def realizer_violation(p: Poset, r: Realizer) -> str | None:
    """First reason why ``r`` fails to realize ``p``, or None if it does."""
    if r.n != p.n:
        return f"ground sets differ: poset on {p.n}, realizer on {r.n}"
    for i, ext in enumerate(r.extensions):
        if not is_linear_extension(p, ext):
            pos = {v: j for j, v in enumerate(ext)}
            for u, v in sorted(p.relation):
                if pos[u] > pos[v]:
                    return (f"extension {i + 1} reverses the order pair "
                            f"({u},{v})")
    meet = intersection_of_extensions(r.extensions)
    for u, v in sorted(meet.relation - p.relation):
        return (f"incomparable pair ({u},{v}) is ordered the same way in "
                f"every extension")
    return None


def has_two_plus_two(p: Poset) -> bool:
    """True iff two disjoint 2-chains exist with all four cross pairs incomparable."""
    rel = sorted(p.relation)
    for a, b in rel:
        for c, d in rel:
            if len({a, b, c, d}) != 4:
                continue
            if (not p.comparable(a, c) and not p.comparable(a, d)
                    and not p.comparable(b, c) and not p.comparable(b, d)):
                return True
    return False


def enumerate_linear_extensions(p: Poset, max_n: int | None = None) -> list[LinearExtension]:
    """All linear extensions of ``p`` in lexicographic order."""
    check_limit("linear extension enumeration", p.n,
                DEFAULT_LIMITS.extensions_max_n, max_n)
    preds = {v: set(p._pred[v]) for v in range(1, p.n + 1)}
    result: list[LinearExtension] = []
    prefix: list[int] = []
    placed: set[int] = set()

    def extend() -> None:
        if len(prefix) == p.n:
            result.append(tuple(prefix))
            return
        for v in range(1, p.n + 1):
            if v in placed or not preds[v] <= placed:
                continue
            placed.add(v)
            prefix.append(v)
            extend()
            prefix.pop()
            placed.remove(v)

    extend()
    return result


def chain_order(p: Poset) -> LinearExtension:
    """The unique linear extension of a chain (elements by predecessor count)."""
    if not p.is_chain():
        raise ValueError("poset is not a chain")
    return tuple(sorted(range(1, p.n + 1), key=lambda v: (len(p._pred[v]), v)))


@dataclass(frozen=True)
class DimensionResult:
    """Exact order dimension together with a witnessing realizer."""

    value: int
    witness: Realizer


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _ReversalCoverSolver:
    """Feasibility of 'one linear extension reverses this set of pairs'.

    A set S of ordered incomparable pairs can be reversed by a single
    extension exactly when the relation plus the reversed pairs stays
    acyclic; the topological order of that digraph is the witness.
    """

    def __init__(self, p: Poset):
        self.p = p
        self.universe = p.incomparable_ordered_pairs()
        self._cache: dict[int, bool] = {}

    def _digraph(self, smask: int) -> Digraph:
        arcs = set(self.p.relation)
        for i in _bits(smask):
            u, v = self.universe[i]
            arcs.add((v, u))
        return Digraph(self.p.n, frozenset(arcs))

    def feasible(self, smask: int) -> bool:
        cached = self._cache.get(smask)
        if cached is None:
            cached = topological_sort(self._digraph(smask)) is not None
            self._cache[smask] = cached
        return cached

    def extension_for(self, smask: int) -> LinearExtension:
        order = topological_sort(self._digraph(smask))
        if order is None:
            raise AssertionError("extension requested for an infeasible pair set")
        return order


def _cover_slots(solver, order: list[int], k: int) -> list[int] | None:
    """Assign every universe index (in fixed order) to one of at most k slots.

    Slots are grown only while they stay feasible; failed slot multisets are
    memoized.  Works for any solver exposing ``feasible(mask)`` whose feasible
    sets are closed under subsets, which makes minimum partition size equal
    to minimum cover size.
    """
    failed: set[tuple[int, ...]] = set()

    def assign(slots: list[int], idx: int) -> list[int] | None:
        if idx == len(order):
            return list(slots)
        key = tuple(sorted(slots))
        if key in failed:
            return None
        bit = 1 << order[idx]
        tried: set[int] = set()
        for s in range(len(slots)):
            if slots[s] in tried:
                continue
            tried.add(slots[s])
            if solver.feasible(slots[s] | bit):
                saved = slots[s]
                slots[s] |= bit
                result = assign(slots, idx + 1)
                if result is not None:
                    return result
                slots[s] = saved
        if len(slots) < k:
            slots.append(bit)
            result = assign(slots, idx + 1)
            if result is not None:
                return result
            slots.pop()
        failed.add(key)
        return None

    return assign([], 0)


def _pack_and_greedy(solver, size: int) -> tuple[list[int], list[int], list[int]]:
    """Shared search scaffolding: packing lower bound, element order, greedy slots.

    The packing is a clique of pairwise non-co-assignable elements, grown
    greedily from every seed element over the full incompatibility matrix;
    its size bounds the cover size from below.
    """
    conflict = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if not solver.feasible((1 << i) | (1 << j)):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i

    packing: list[int] = []
    for seed in range(size):
        clique = [seed]
        allowed = conflict[seed]
        while allowed:
            nxt = (allowed & -allowed).bit_length() - 1
            clique.append(nxt)
            allowed &= conflict[nxt]
        if len(clique) > len(packing):
            packing = clique

    order = packing + [i for i in range(size) if i not in packing]
    slots: list[int] = []
    for i in order:
        bit = 1 << i
        for s in range(len(slots)):
            if solver.feasible(slots[s] | bit):
                slots[s] |= bit
                break
        else:
            slots.append(bit)
    return packing, order, slots


def brute_dimension(p: Poset, max_n: int | None = None) -> DimensionResult:
    """Exact dimension of ``p`` by branch-and-bound cover of reversed pairs.

    The cover universe is the set of ordered incomparable pairs (u, v); an
    extension covers (u, v) when it places v before u.  The minimum number of
    extensions covering every pair is the dimension.  Covers are searched as
    partitions (reversible pair sets are closed under subsets), slot
    feasibility being a single acyclicity test.  Chains (including a single
    element) have dimension 1 by convention.  Fully deterministic, so the
    witness is reproducible.
    """
    check_limit("dimension oracle", p.n, DEFAULT_LIMITS.dimension_max_n, max_n)
    universe = p.incomparable_ordered_pairs()
    if not universe:
        return DimensionResult(1, Realizer((chain_order(p),)))

    solver = _ReversalCoverSolver(p)
    packing, order, best = _pack_and_greedy(solver, len(universe))
    lower = len(packing)  # opposite orientations of one pair are never co-reversible

    for k in range(lower, len(best)):
        found = _cover_slots(solver, order, k)
        if found is not None:
            best = found
            break

    witness = Realizer(tuple(solver.extension_for(s) for s in best))
    if not verify_realizer(p, witness):
        raise AssertionError("dimension witness failed realizer verification")
    return DimensionResult(len(best), witness)
