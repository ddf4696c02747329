"""Constructive transformations between box representations and realizers.

This module holds the bound-witnessing constructions: box representation to
realizer (two extensions per member), realizer plus chain coloring to box
representation, the extended double cover in both directions, and the
bipartite / co-bipartite conversions they rest on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boxes import BoxRepresentation, box_representation_violation, verify_box_representation
from .graphs import (Bipartition, Coloring, Graph, chain_length_coloring,
                     is_bipartite_with, underlying_comparability_graph)
from .intervals import (Interval, IntervalRepresentation, canonical_cobipartite_rep,
                        distinguish_inner_endpoints, interval_orders_from_rep)
from .posets import (Digraph, Poset, Realizer, chain_order, find_directed_cycle,
                     topological_sort, verify_realizer)


@dataclass(frozen=True)
class CoverVertexMap:
    """Vertex conventions of the extended double cover on 2n vertices."""

    base_n: int

    def a_of(self, u: int) -> int:
        return u

    def b_of(self, u: int) -> int:
        return u + self.base_n

    @property
    def parts(self) -> Bipartition:
        return Bipartition(frozenset(range(1, self.base_n + 1)),
                           frozenset(range(self.base_n + 1, 2 * self.base_n + 1)))


# ---------------------------------------------------------------------------
# Box representation -> realizer
# ---------------------------------------------------------------------------

def realizer_from_box(p: Poset, b: BoxRepresentation) -> Realizer:
    """Two linear extensions per member, jointly realizing ``p``.

    Each member's interval order is merged with ``p`` once forwards and once
    backwards, and the two resulting acyclic digraphs are topologically
    sorted.  A chain returns its one extension.  Acyclicity is guaranteed for
    valid inputs and asserted with a diagnostic naming any offending cycle.
    """
    target = underlying_comparability_graph(p)
    if b.target != target:
        raise ValueError("box representation targets a different graph than the order")
    problem = box_representation_violation(b)
    if problem is not None:
        raise ValueError(f"invalid box representation: {problem}")
    if p.is_chain():
        return Realizer((chain_order(p),))

    extensions: list[tuple[int, ...]] = []
    for i, rep in enumerate(b.reps):
        forward, backward = interval_orders_from_rep(rep, target)
        for orientation in (forward, backward):
            digraph = Digraph(p.n, p.relation | orientation.relation)
            order = topological_sort(digraph)
            if order is None:
                cycle = find_directed_cycle(digraph)
                raise AssertionError(
                    f"member {i + 1} produced a cyclic order merge: cycle {cycle}")
            extensions.append(order)
    realizer = Realizer(tuple(extensions))
    if not verify_realizer(p, realizer):
        raise AssertionError("constructed extensions do not realize the order")
    return realizer


# ---------------------------------------------------------------------------
# Realizer -> box representation
# ---------------------------------------------------------------------------

def box_from_realizer(p: Poset, r: Realizer, c: Coloring) -> BoxRepresentation:
    """Point/ray interval members built from a realizer and the chain coloring.

    With chromatic number x and k extensions this produces (x-1)*k members:
    in member (i, j) the color-i vertices become points at their position in
    extension j, smaller colors become rays to the right, larger colors rays
    from the left; the final member instead pins the top color class.  Chains
    return the empty representation of their complete graph; a coloring with
    a single color is rejected.
    """
    if c != chain_length_coloring(p):
        raise ValueError("coloring must be the longest-chain coloring of the order")
    target = underlying_comparability_graph(p)
    if p.is_chain():
        return BoxRepresentation(target, ())
    chi = c.max_color
    if chi < 2:
        raise ValueError("an antichain (single color class) admits no such construction")
    if not verify_realizer(p, r):
        raise ValueError("the given extensions do not realize the order")

    layers = chi - 1
    k = len(r)
    n = p.n
    members = []
    for i in range(1, layers + 1):
        for j in range(1, k + 1):
            position = {v: idx + 1 for idx, v in enumerate(r.extensions[j - 1])}
            last = (i == layers and j == k)
            intervals = {}
            for v in range(1, n + 1):
                pos = position[v]
                col = c.color[v]
                if last:
                    intervals[v] = Interval(pos, pos) if col == chi else Interval(pos, n + 1)
                elif col == i:
                    intervals[v] = Interval(pos, pos)
                elif col < i:
                    intervals[v] = Interval(pos, n + 1)
                else:
                    intervals[v] = Interval(0, pos)
            members.append(IntervalRepresentation.from_dict(n, intervals))
    box = BoxRepresentation(target, tuple(members))
    problem = box_representation_violation(box)
    if problem is not None:
        raise AssertionError(f"realizer-built representation failed: {problem}")
    return box


# ---------------------------------------------------------------------------
# Extended double cover and its height-2 order
# ---------------------------------------------------------------------------

def extended_double_cover(g: Graph) -> tuple[Graph, CoverVertexMap]:
    """Bipartite graph on two copies of V with u_A ~ v_B iff u = v or uv is an edge."""
    cmap = CoverVertexMap(g.n)
    edges = [(cmap.a_of(u), cmap.b_of(u)) for u in g.vertices()]
    for u, v in g.edges:
        edges.append((cmap.a_of(u), cmap.b_of(v)))
        edges.append((cmap.a_of(v), cmap.b_of(u)))
    return Graph.from_edges(2 * g.n, edges), cmap


def natural_height2_poset(g: Graph, parts: Bipartition) -> Poset:
    """Height-2 order of a bipartite graph: a-side minimal, b-side maximal."""
    if not is_bipartite_with(g, parts):
        raise ValueError("graph is not bipartite with the given parts")
    rel = frozenset((u, v) if u in parts.a_side else (v, u) for u, v in g.edges)
    return Poset(g.n, rel)


def associated_cobipartite(g: Graph, parts: Bipartition) -> Graph:
    """Complete both sides into cliques, keeping the cross edges unchanged."""
    if not is_bipartite_with(g, parts):
        raise ValueError("graph is not bipartite with the given parts")
    edges = set(g.edges)
    for side in (parts.a_side, parts.b_side):
        members = sorted(side)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.add((u, v) if u < v else (v, u))
    return Graph(g.n, frozenset(edges))


# ---------------------------------------------------------------------------
# Bipartite <-> co-bipartite box representations
# ---------------------------------------------------------------------------

def _collapse(rep: IntervalRepresentation, side: frozenset[int],
              to_left: bool) -> IntervalRepresentation:
    intervals = {}
    for v in range(1, rep.n + 1):
        iv = rep[v]
        if v in side:
            point = iv.left if to_left else iv.right
            intervals[v] = Interval(point, point)
        else:
            intervals[v] = iv
    return IntervalRepresentation.from_dict(rep.n, intervals)


def bip_box_from_cobip(h: Graph, parts: Bipartition,
                       b: BoxRepresentation) -> BoxRepresentation:
    """Box representation of a bipartite graph from one of its completed form.

    All members are anchored and endpoint-separated; the first then collapses
    every b-side interval to its left endpoint (killing b-side adjacencies)
    and the second collapses every a-side interval to its right endpoint.  A
    single-member input is duplicated before collapsing, so the output always
    has max(2, k) members.
    """
    hstar = associated_cobipartite(h, parts)
    if b.target != hstar:
        raise ValueError("representation must target the completed (co-bipartite) graph")
    problem = box_representation_violation(b)
    if problem is not None:
        raise ValueError(f"invalid box representation: {problem}")

    if b.reps:
        sources = list(b.reps)
    else:
        # Complete target: synthesize the trivial one-point representation.
        sources = [IntervalRepresentation(h.n, tuple(Interval(0, 0) for _ in range(h.n)))]
    if len(sources) == 1:
        sources = [sources[0], sources[0]]

    shaped = [distinguish_inner_endpoints(canonical_cobipartite_rep(rep, parts), parts)
              for rep in sources]
    members = [_collapse(shaped[0], parts.b_side, to_left=True),
               _collapse(shaped[1], parts.a_side, to_left=False)]
    members.extend(shaped[2:])
    box = BoxRepresentation(h, tuple(members))
    issue = box_representation_violation(box)
    if issue is not None:
        raise AssertionError(f"bipartite conversion failed: {issue}")
    return box


def cobip_box_from_bip(h: Graph, parts: Bipartition,
                       b: BoxRepresentation) -> BoxRepresentation:
    """Box representation of the completed graph from a bipartite one.

    Each member spawns two: one extends a-side intervals to the leftmost
    point and b-side intervals to the rightmost, the other does the opposite.
    Output size is exactly twice the input size.
    """
    if not is_bipartite_with(h, parts):
        raise ValueError("graph is not bipartite with the given parts")
    if b.target != h:
        raise ValueError("representation must target the bipartite graph")
    problem = box_representation_violation(b)
    if problem is not None:
        raise ValueError(f"invalid box representation: {problem}")
    hstar = associated_cobipartite(h, parts)
    members = []
    for rep in b.reps:
        lo = min(rep.left(v) for v in range(1, rep.n + 1))
        hi = max(rep.right(v) for v in range(1, rep.n + 1))
        first = {}
        second = {}
        for v in range(1, rep.n + 1):
            iv = rep[v]
            if v in parts.a_side:
                first[v] = Interval(lo, iv.right)
                second[v] = Interval(iv.left, hi)
            else:
                first[v] = Interval(iv.left, hi)
                second[v] = Interval(lo, iv.right)
        members.append(IntervalRepresentation.from_dict(rep.n, first))
        members.append(IntervalRepresentation.from_dict(rep.n, second))
    box = BoxRepresentation(hstar, tuple(members))
    issue = box_representation_violation(box)
    if issue is not None:
        raise AssertionError(f"co-bipartite conversion failed: {issue}")
    return box


# ---------------------------------------------------------------------------
# Base graph <-> extended double cover box representations
# ---------------------------------------------------------------------------

def cover_box_from_base(g: Graph, b: BoxRepresentation) -> BoxRepresentation:
    """Box representation of the extended double cover with k + 2 members.

    Members 1..k copy each base interval onto both copies of its vertex; the
    two extra members pin one copy side to distinct points while the other
    side spans everything, which removes the within-side adjacencies.
    """
    if b.target != g:
        raise ValueError("representation must target the base graph")
    problem = box_representation_violation(b)
    if problem is not None:
        raise ValueError(f"invalid box representation: {problem}")
    cover, cmap = extended_double_cover(g)
    n = g.n
    members = []
    for rep in b.reps:
        doubled = {}
        for u in g.vertices():
            doubled[cmap.a_of(u)] = rep[u]
            doubled[cmap.b_of(u)] = rep[u]
        members.append(IntervalRepresentation.from_dict(2 * n, doubled))
    span = Interval(0, n + 1)
    pin_b = {}
    pin_a = {}
    for u in g.vertices():
        pin_b[cmap.a_of(u)] = span
        pin_b[cmap.b_of(u)] = Interval(u, u)
        pin_a[cmap.a_of(u)] = Interval(u, u)
        pin_a[cmap.b_of(u)] = span
    members.append(IntervalRepresentation.from_dict(2 * n, pin_b))
    members.append(IntervalRepresentation.from_dict(2 * n, pin_a))
    box = BoxRepresentation(cover, tuple(members))
    issue = box_representation_violation(box)
    if issue is not None:
        raise AssertionError(f"cover construction failed: {issue}")
    return box


def base_box_from_cover(g: Graph, cover_b: BoxRepresentation) -> BoxRepresentation:
    """Box representation of the base graph from one of its extended double cover.

    The cover representation is first converted to the completed co-bipartite
    form (two members per input member), each member is anchored, and every
    base vertex then receives the overlap of its two copies' intervals, which
    is non-empty because the copies are always adjacent.
    """
    cover, cmap = extended_double_cover(g)
    if cover_b.target != cover:
        raise ValueError("representation must target the extended double cover")
    problem = box_representation_violation(cover_b)
    if problem is not None:
        raise ValueError(f"invalid box representation: {problem}")
    parts = cmap.parts
    completed = cobip_box_from_bip(cover, parts, cover_b)
    members = []
    for rep in completed.reps:
        shaped = canonical_cobipartite_rep(rep, parts)
        intervals = {}
        for u in g.vertices():
            left = shaped.left(cmap.b_of(u))
            right = shaped.right(cmap.a_of(u))
            if left > right:
                raise AssertionError(
                    f"copies of vertex {u} received disjoint intervals")
            intervals[u] = Interval(left, right)
        members.append(IntervalRepresentation.from_dict(g.n, intervals))
    box = BoxRepresentation(g, tuple(members))
    issue = box_representation_violation(box)
    if issue is not None:
        raise AssertionError(f"base reconstruction failed: {issue}")
    return box
