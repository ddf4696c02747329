"""Closed-interval representations: recognition, reshaping, induced orders.

Endpoints are exact rationals (int or Fraction); every transformation here
emits integer endpoints, so rationals only enter through caller-built data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graphs import Bipartition, Graph, check_parts, sides_are_cliques
from .limits import DEFAULT_LIMITS, OracleLimitError, check_limit
from .posets import Poset

Rational = int | Fraction


@dataclass(frozen=True)
class Interval:
    """Closed interval [left, right] with rational endpoints."""

    left: Rational
    right: Rational

    def __post_init__(self) -> None:
        if self.left > self.right:
            raise ValueError(f"empty interval [{self.left}, {self.right}]")


@dataclass(frozen=True)
class IntervalRepresentation:
    """One closed interval per vertex 1..n, stored in vertex order."""

    n: int
    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        if len(self.intervals) != self.n:
            raise ValueError(f"need exactly {self.n} intervals, got {len(self.intervals)}")

    @classmethod
    def from_dict(cls, n: int, mapping: dict[int, Interval]) -> "IntervalRepresentation":
        if set(mapping) != set(range(1, n + 1)):
            raise ValueError(f"interval map must cover exactly the vertices 1..{n}")
        return cls(n, tuple(mapping[v] for v in range(1, n + 1)))

    def __getitem__(self, v: int) -> Interval:
        return self.intervals[v - 1]

    def left(self, v: int) -> Rational:
        return self.intervals[v - 1].left

    def right(self, v: int) -> Rational:
        return self.intervals[v - 1].right


def intervals_intersect(x: Interval, y: Interval) -> bool:
    """Closed intervals meet iff each starts no later than the other ends."""
    return x.left <= y.right and y.left <= x.right


def induced_graph(rep: IntervalRepresentation) -> Graph:
    edges = [(u, v)
             for u in range(1, rep.n + 1)
             for v in range(u + 1, rep.n + 1)
             if intervals_intersect(rep[u], rep[v])]
    return Graph.from_edges(rep.n, edges)


# ---------------------------------------------------------------------------
# Recognition via maximal cliques and a consecutive ordering
# ---------------------------------------------------------------------------

def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted for determinism."""
    masks = g.adjacency_masks
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best = pivot
        best_deg = (masks[pivot + 1] & p).bit_count()
        rest = pivot_pool
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            deg = (masks[v + 1] & p).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
            rest ^= low
        cand = p & ~masks[best + 1]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & masks[v + 1], x & masks[v + 1])
            p &= ~low
            x |= low
            cand ^= low
    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    cliques = [frozenset(v + 1 for v in range(g.n) if m >> v & 1) for m in found]
    return sorted(cliques, key=sorted)


def _consecutive_ordering(cliques: list[frozenset[int]]) -> list[int] | None:
    """Order clique indices so each vertex's cliques are consecutive, or None."""
    k = len(cliques)
    order: list[int] = []
    used = [False] * k

    def place(started: frozenset[int], closed: frozenset[int]) -> bool:
        if len(order) == k:
            return True
        for i in range(k):
            if used[i] or cliques[i] & closed:
                continue
            newly_closed = frozenset(v for v in started if v not in cliques[i])
            used[i] = True
            order.append(i)
            if place(started | cliques[i], closed | newly_closed):
                return True
            order.pop()
            used[i] = False
        return False

    return order if place(frozenset(), frozenset()) else None


def recognize_interval_graph(
        g: Graph,
        max_n: int | None = None,
        max_cliques: int | None = None) -> IntervalRepresentation | None:
    """An interval representation inducing exactly ``g``, or None.

    Searches for an ordering of the maximal cliques in which every vertex's
    cliques appear consecutively; the representation maps each vertex to the
    positions of its first and last clique.
    """
    check_limit("interval recognition", g.n, DEFAULT_LIMITS.recognition_max_n, max_n)
    cliques = maximal_cliques(g)
    clique_cap = (DEFAULT_LIMITS.recognition_max_cliques
                  if max_cliques is None else max_cliques)
    if len(cliques) > clique_cap:
        raise OracleLimitError(
            f"interval recognition: {len(cliques)} maximal cliques exceed "
            f"the limit {clique_cap}")
    ordering = _consecutive_ordering(cliques)
    if ordering is None:
        return None
    position = {ci: pos + 1 for pos, ci in enumerate(ordering)}
    intervals = {}
    for v in g.vertices():
        spots = [position[i] for i, c in enumerate(cliques) if v in c]
        intervals[v] = Interval(min(spots), max(spots))
    return IntervalRepresentation.from_dict(g.n, intervals)


def _edge_mask(g: Graph) -> int:
    mask = 0
    pairs = [(u, v) for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)]
    for i, pair in enumerate(pairs):
        if pair in g.edges:
            mask |= 1 << i
    return mask


@lru_cache(maxsize=None)
def _recognize_cached(n: int, edge_mask: int) -> IntervalRepresentation | None:
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = [pairs[i] for i in range(len(pairs)) if edge_mask >> i & 1]
    return recognize_interval_graph(Graph.from_edges(n, edges), max_n=n,
                                    max_cliques=2 * n + 2)


# ---------------------------------------------------------------------------
# Reshaping
# ---------------------------------------------------------------------------

def make_distinguishing(rep: IntervalRepresentation) -> IntervalRepresentation:
    """Spread all 2n endpoints onto distinct integers, preserving the graph.

    Coinciding coordinates are broken by placing left endpoints before right
    endpoints (so touching closed intervals keep intersecting), then by
    vertex index.
    """
    events = []
    for v in range(1, rep.n + 1):
        events.append((rep.left(v), 0, v))
        events.append((rep.right(v), 1, v))
    events.sort(key=lambda e: (e[0], e[1], e[2]))
    coordinate: dict[tuple[int, int], int] = {}
    for new, (_, kind, v) in enumerate(events, start=1):
        coordinate[kind, v] = new
    return IntervalRepresentation.from_dict(
        rep.n,
        {v: Interval(coordinate[0, v], coordinate[1, v]) for v in range(1, rep.n + 1)})


def normalize_integer_endpoints(rep: IntervalRepresentation) -> IntervalRepresentation:
    """Relabel endpoint values order-isomorphically onto 0, 1, 2, ...

    Equal coordinates stay equal, so anchored representations keep their
    anchors; the induced graph never changes.  Idempotent on representations
    that already use consecutive integers starting at 0.
    """
    values = sorted({rep.left(v) for v in range(1, rep.n + 1)}
                    | {rep.right(v) for v in range(1, rep.n + 1)})
    relabel = {val: i for i, val in enumerate(values)}
    return IntervalRepresentation.from_dict(
        rep.n,
        {v: Interval(relabel[rep.left(v)], relabel[rep.right(v)])
         for v in range(1, rep.n + 1)})


def canonical_cobipartite_rep(rep: IntervalRepresentation,
                              parts: Bipartition) -> IntervalRepresentation:
    """Anchor a-side intervals at the leftmost point and b-side at the rightmost.

    Requires both sides to induce cliques.  If the a-side common point lies
    right of the b-side one, the representation is mirrored first; a complete
    graph collapses to identical point intervals.
    """
    graph = induced_graph(rep)
    parts = Bipartition(parts.a_side, parts.b_side)
    if not sides_are_cliques(graph, parts):
        raise ValueError("parts must induce cliques in the represented graph")
    if graph.is_complete():
        return IntervalRepresentation(rep.n, tuple(Interval(0, 0) for _ in range(rep.n)))

    left_anchor = max(rep.left(v) for v in parts.a_side)
    right_anchor = min(rep.right(v) for v in parts.b_side)
    if left_anchor > right_anchor:
        rep = IntervalRepresentation(
            rep.n, tuple(Interval(-iv.right, -iv.left) for iv in rep.intervals))
        left_anchor = max(rep.left(v) for v in parts.a_side)
        right_anchor = min(rep.right(v) for v in parts.b_side)
    if left_anchor >= right_anchor:
        raise AssertionError("distinct anchors must exist for a non-complete graph")

    intervals = {}
    for v in range(1, rep.n + 1):
        if v in parts.a_side:
            intervals[v] = Interval(left_anchor, min(rep.right(v), right_anchor))
        else:
            intervals[v] = Interval(max(rep.left(v), left_anchor), right_anchor)
    out = normalize_integer_endpoints(IntervalRepresentation.from_dict(rep.n, intervals))
    if induced_graph(out) != graph:
        raise AssertionError("anchoring changed the induced graph")
    return out


def _check_canonical(rep: IntervalRepresentation, parts: Bipartition) -> None:
    lo = min(rep.left(v) for v in range(1, rep.n + 1))
    hi = max(rep.right(v) for v in range(1, rep.n + 1))
    if any(rep.left(v) != lo for v in parts.a_side):
        raise ValueError("not canonical: a-side left endpoints must sit at the leftmost point")
    if any(rep.right(v) != hi for v in parts.b_side):
        raise ValueError("not canonical: b-side right endpoints must sit at the rightmost point")


def distinguish_inner_endpoints(rep: IntervalRepresentation,
                                parts: Bipartition) -> IntervalRepresentation:
    """Make a-side right endpoints and b-side left endpoints pairwise distinct.

    The input must be canonical for ``parts``; anchors are preserved.  At a
    coinciding coordinate a b-side left endpoint is placed before an a-side
    right endpoint, which keeps touching pairs adjacent.
    """
    if parts.a_side | parts.b_side != set(range(1, rep.n + 1)):
        raise ValueError("parts do not cover the vertex set")
    _check_canonical(rep, parts)
    events = []
    for v in sorted(parts.b_side):
        events.append((rep.left(v), 0, v))
    for v in sorted(parts.a_side):
        events.append((rep.right(v), 1, v))
    events.sort(key=lambda e: (e[0], e[1], e[2]))
    spot = {(kind, v): i for i, (_, kind, v) in enumerate(events, start=1)}
    hi = rep.n + 1
    intervals = {}
    for v in range(1, rep.n + 1):
        if v in parts.a_side:
            intervals[v] = Interval(0, spot[1, v])
        else:
            intervals[v] = Interval(spot[0, v], hi)
    out = IntervalRepresentation.from_dict(rep.n, intervals)
    if induced_graph(out) != induced_graph(rep):
        raise AssertionError("endpoint separation changed the induced graph")
    return out


# ---------------------------------------------------------------------------
# Interval orders
# ---------------------------------------------------------------------------

def interval_orders_from_rep(rep: IntervalRepresentation,
                             base: Graph) -> tuple[Poset, Poset]:
    """The two interval orders read off a representation.

    For every pair that is non-adjacent in the represented graph, the first
    order puts a below b when a's interval ends before b's begins; the second
    order reverses each such pair.  The representation must induce a
    supergraph of ``base``.
    """
    if base.n != rep.n:
        raise ValueError(f"vertex sets differ: representation on {rep.n}, graph on {base.n}")
    graph = induced_graph(rep)
    if not base.edges <= graph.edges:
        missing = sorted(base.edges - graph.edges)[0]
        raise ValueError(
            f"representation is not a supergraph of the target: edge {missing} missing")
    forward = set()
    backward = set()
    for u in range(1, rep.n + 1):
        for v in range(1, rep.n + 1):
            if u == v or graph.has_edge(u, v):
                continue
            if rep.right(u) < rep.left(v):
                forward.add((u, v))
                backward.add((v, u))
    return Poset(rep.n, frozenset(forward)), Poset(rep.n, frozenset(backward))
