"""Box representations (intersections of interval graphs) and the exact boxicity solver."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .intervals import (Interval, IntervalRepresentation, _edge_mask,
                        _recognize_cached, induced_graph)
from .limits import DEFAULT_LIMITS, check_limit
from .posets import _cover_slots, _pack_and_greedy


@dataclass(frozen=True)
class BoxRepresentation:
    """Interval representations whose induced graphs intersect to ``target``.

    The list may be empty only when the target is complete.
    """

    target: Graph
    reps: tuple[IntervalRepresentation, ...]

    def __post_init__(self) -> None:
        for i, rep in enumerate(self.reps):
            if rep.n != self.target.n:
                raise ValueError(
                    f"member {i + 1} lives on {rep.n} vertices, target on {self.target.n}")

    def __len__(self) -> int:
        return len(self.reps)


def box_representation_violation(b: BoxRepresentation) -> str | None:
    """First broken invariant of ``b`` described as text, or None if valid."""
    if not b.reps:
        if b.target.is_complete():
            return None
        missing = b.target.nonedges()[0]
        return (f"empty representation only fits a complete target, but "
                f"{missing} is a non-edge")
    remaining = set(b.target.nonedges())
    for i, rep in enumerate(b.reps):
        member = induced_graph(rep)
        if not b.target.edges <= member.edges:
            u, v = sorted(b.target.edges - member.edges)[0]
            return f"member {i + 1} misses the target edge ({u},{v})"
        remaining -= set(member.nonedges())
    if remaining:
        u, v = sorted(remaining)[0]
        return f"non-edge ({u},{v}) is an edge in every member"
    return None


def verify_box_representation(b: BoxRepresentation) -> bool:
    """True iff every member is a supergraph and the intersection is the target."""
    return box_representation_violation(b) is None


def enumerate_interval_supergraphs(
        g: Graph, max_n: int | None = None) -> list[tuple[Graph, IntervalRepresentation]]:
    """All interval graphs on the same vertex set containing ``g``, each with a witness.

    Ordered by the added edge set (as a bitmask over the non-edges of ``g``,
    ascending), so the first entry is ``g`` itself when it is interval.
    """
    check_limit("interval supergraph enumeration", g.n,
                DEFAULT_LIMITS.supergraphs_max_n, max_n)
    missing = g.nonedges()
    out = []
    for added in range(1 << len(missing)):
        extra = [missing[i] for i in range(len(missing)) if added >> i & 1]
        h = Graph(g.n, g.edges | frozenset(extra))
        rep = _recognize_cached(h.n, _edge_mask(h))
        if rep is not None:
            out.append((h, rep))
    return out


class _SandwichSolver:
    """Feasibility of 'some interval supergraph of g avoids this non-edge set'.

    A set S of non-edges is feasible iff the vertices can be ordered so that
    whenever the earlier endpoint of an S pair still has unplaced neighbors,
    the later endpoint is not placed yet.  Such an order yields intervals
    [position, last neighbor position] inducing an interval supergraph whose
    missing pairs include S.  Feasibility is decided by a reachability sweep
    over placed-vertex subsets, so one query costs O(2^n * n) bit operations.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.nonedges = g.nonedges()
        self.nbr = g.adjacency_masks
        self._feasible_cache: dict[int, bool] = {}
        self._known_feasible: list[int] = []
        self._known_infeasible: list[int] = []

    def _partners(self, smask: int) -> list[int]:
        partners = [0] * (self.n + 1)
        for i in _bits(smask):
            u, v = self.nonedges[i]
            partners[u] |= 1 << (v - 1)
            partners[v] |= 1 << (u - 1)
        return partners

    def feasible(self, smask: int) -> bool:
        cached = self._feasible_cache.get(smask)
        if cached is not None:
            return cached
        for known in self._known_feasible:
            if smask & ~known == 0:
                self._feasible_cache[smask] = True
                return True
        for known in self._known_infeasible:
            if known & ~smask == 0:
                self._feasible_cache[smask] = False
                return False
        result = self._sweep(smask)
        self._feasible_cache[smask] = result
        (self._known_feasible if result else self._known_infeasible).append(smask)
        return result

    def _sweep(self, smask: int) -> bool:
        partners = self._partners(smask)
        nbr = self.nbr
        full = (1 << self.n) - 1
        reach = bytearray(full + 1)
        reach[0] = 1
        for placed in range(full + 1):
            if not reach[placed]:
                continue
            if placed == full:
                return True
            rest = full & ~placed
            while rest:
                low = rest & -rest
                rest ^= low
                w = low.bit_length()
                blockers = placed & partners[w]
                ok = True
                while blockers:
                    blow = blockers & -blockers
                    blockers ^= blow
                    u = blow.bit_length()
                    if nbr[u] & ~placed:
                        ok = False
                        break
                if ok:
                    reach[placed | low] = 1
        return False

    def placement_order(self, smask: int) -> list[int]:
        """Deterministic witness order for a feasible set (lowest vertex first)."""
        partners = self._partners(smask)
        nbr = self.nbr
        full = (1 << self.n) - 1
        dead: set[int] = set()
        order: list[int] = []

        def extend(placed: int) -> bool:
            if placed == full:
                return True
            if placed in dead:
                return False
            for w in range(1, self.n + 1):
                low = 1 << (w - 1)
                if placed & low:
                    continue
                blockers = placed & partners[w]
                ok = True
                while blockers:
                    blow = blockers & -blockers
                    blockers ^= blow
                    if nbr[blow.bit_length()] & ~placed:
                        ok = False
                        break
                if ok:
                    order.append(w)
                    if extend(placed | low):
                        return True
                    order.pop()
            dead.add(placed)
            return False

        if not extend(0):
            raise AssertionError("placement_order called on an infeasible set")
        return order

    def member_from_order(self, order: list[int]) -> IntervalRepresentation:
        """Intervals [position, last later-placed neighbor] for a placement order."""
        pos = {v: i + 1 for i, v in enumerate(order)}
        intervals = {}
        for v in range(1, self.n + 1):
            reach_to = max((pos[w] for w in self.g.adjacency[v] if pos[w] > pos[v]),
                           default=pos[v])
            intervals[v] = Interval(pos[v], reach_to)
        return IntervalRepresentation.from_dict(self.n, intervals)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BoxicityResult:
    """Exact boxicity together with a witnessing box representation."""

    value: int
    witness: BoxRepresentation


def brute_boxicity(g: Graph, max_n: int | None = None) -> BoxicityResult:
    """Exact boxicity by branch-and-bound cover of the non-edge set.

    Each interval supergraph covers the non-edges it also lacks; the minimum
    number of supergraphs covering every non-edge is the boxicity (0 for a
    complete graph).  Supergraphs are explored lazily: a partial cover keeps
    one non-edge set per slot and extends it only while some interval
    supergraph can still avoid the whole set.  Deterministic, so witnesses
    are reproducible.
    """
    if g.n < 1:
        raise ValueError("boxicity needs at least one vertex")
    check_limit("boxicity oracle", g.n, DEFAULT_LIMITS.boxicity_max_n, max_n)
    if g.is_complete():
        return BoxicityResult(0, BoxRepresentation(g, ()))

    solver = _SandwichSolver(g)
    m = len(solver.nonedges)
    full = (1 << m) - 1

    if solver.feasible(full):
        witness = _assemble(g, solver, [full])
        return BoxicityResult(1, witness)

    # Pairwise-incompatible non-edges give a lower bound on the cover size;
    # a non-interval graph needs at least two members regardless.
    packing, order, best = _pack_and_greedy(solver, m)
    lower = max(2, len(packing))

    for k in range(lower, len(best)):
        found = _cover_slots(solver, order, k)
        if found is not None:
            best = found
            break

    witness = _assemble(g, solver, best)
    return BoxicityResult(len(best), witness)


def _assemble(g: Graph, solver: _SandwichSolver, slot_masks: list[int]) -> BoxRepresentation:
    reps = tuple(solver.member_from_order(solver.placement_order(s))
                 for s in slot_masks)
    witness = BoxRepresentation(g, reps)
    problem = box_representation_violation(witness)
    if problem is not None:
        raise AssertionError(f"boxicity witness failed verification: {problem}")
    return witness
