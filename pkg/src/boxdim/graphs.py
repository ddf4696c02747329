"""Simple undirected graphs, bipartitions, colorings, and comparability tools."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .limits import DEFAULT_LIMITS, check_limit
from .posets import Poset


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 1..n; edges stored as sorted pairs (u, v), u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {e} is not a sorted in-range pair for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at {u} not allowed")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmasks indexed by vertex; bit v-1 stands for vertex v."""
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << (v - 1)
            masks[v] |= 1 << (u - 1)
        return masks

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def nonedges(self) -> list[tuple[int, int]]:
        return [(u, v)
                for u in range(1, self.n + 1)
                for v in range(u + 1, self.n + 1)
                if (u, v) not in self.edges]

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(g.nonedges()))


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint non-empty vertex sets; the graph decides what they mean."""

    a_side: frozenset[int]
    b_side: frozenset[int]

    def __post_init__(self) -> None:
        if not self.a_side or not self.b_side:
            raise ValueError("both sides must be non-empty")
        if self.a_side & self.b_side:
            raise ValueError("sides must be disjoint")


def check_parts(g: Graph, parts: Bipartition) -> None:
    """Parts must exactly partition the vertex set of ``g``."""
    if parts.a_side | parts.b_side != set(g.vertices()):
        raise ValueError("parts do not cover the vertex set")


def is_bipartite_with(g: Graph, parts: Bipartition) -> bool:
    """True iff no edge of ``g`` lies inside either side."""
    check_parts(g, parts)
    return not any(
        (u in parts.a_side and v in parts.a_side)
        or (u in parts.b_side and v in parts.b_side)
        for u, v in g.edges)


def sides_are_cliques(g: Graph, parts: Bipartition) -> bool:
    check_parts(g, parts)
    for side in (parts.a_side, parts.b_side):
        for u in side:
            for v in side:
                if u < v and not g.has_edge(u, v):
                    return False
    return True


def bipartition_of(g: Graph) -> Bipartition | None:
    """A bipartition certificate if ``g`` is bipartite, else None.

    Deterministic: components are explored by BFS from their lowest-index
    vertex, which lands on the a side.  On edgeless graphs the highest
    vertex is moved to the b side so that both sides stay non-empty; a
    single-vertex graph has no such certificate.
    """
    if g.n < 2:
        return None
    side: dict[int, int] = {}
    for start in g.vertices():
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    a = frozenset(v for v in g.vertices() if side[v] == 0)
    b = frozenset(v for v in g.vertices() if side[v] == 1)
    if not b:
        a, b = a - {g.n}, frozenset({g.n})
    return Bipartition(a, b)


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring with colors forming a contiguous range 1..max."""

    color: dict[int, int]

    def __post_init__(self) -> None:
        used = set(self.color.values())
        if used and used != set(range(1, max(used) + 1)):
            raise ValueError("colors must form a contiguous range 1..max")

    @property
    def max_color(self) -> int:
        return max(self.color.values()) if self.color else 0


def is_proper_coloring(g: Graph, c: Coloring) -> bool:
    return all(c.color[u] != c.color[v] for u, v in g.edges)


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    witness: Coloring


def brute_chromatic(g: Graph, max_n: int | None = None) -> ChromaticResult:
    """Exact chromatic number by backtracking over color counts 1..n.

    Vertices are tried in decreasing-degree order (index ties broken low
    first), and a vertex may only open one fresh color, which prunes
    color permutations.
    """
    if g.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    check_limit("chromatic oracle", g.n, DEFAULT_LIMITS.chromatic_max_n, max_n)
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    assigned: dict[int, int] = {}

    def place(idx: int, k: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        used = max(assigned.values(), default=0)
        for c in range(1, min(k, used + 1) + 1):
            if all(assigned.get(w) != c for w in g.adjacency[v]):
                assigned[v] = c
                if place(idx + 1, k):
                    return True
                del assigned[v]
        return False

    for k in range(1, g.n + 1):
        assigned.clear()
        if place(0, k):
            return ChromaticResult(k, Coloring(dict(sorted(assigned.items()))))
    raise AssertionError("unreachable: n colors always suffice")


def transitive_orientation(g: Graph) -> Poset | None:
    """A poset whose comparability graph equals ``g``, or None.

    Backtracking search: orient one edge, propagate the forcing rules, and
    certify the completed orientation by an explicit transitivity check.
    Exponential in the worst case, which is acceptable at this scale.
    """
    edges = sorted(g.edges)
    if not edges:
        return Poset(g.n, frozenset())

    def propagate(orient: dict[tuple[int, int], tuple[int, int]],
                  queue: list[tuple[int, int]]) -> bool:
        # (a, b) forces (a, c) on edges {a, c} with {b, c} absent, and
        # (c, b) on edges {c, b} with {a, c} absent.
        while queue:
            a, b = queue.pop()
            forced = []
            for c in g.adjacency[a]:
                if c != b and not g.has_edge(b, c):
                    forced.append((a, c))
            for c in g.adjacency[b]:
                if c != a and not g.has_edge(a, c):
                    forced.append((c, b))
            for x, y in forced:
                key = (x, y) if x < y else (y, x)
                prev = orient.get(key)
                if prev is None:
                    orient[key] = (x, y)
                    queue.append((x, y))
                elif prev != (x, y):
                    return False
        return True

    def is_transitive(orient: dict[tuple[int, int], tuple[int, int]]) -> bool:
        arcs = set(orient.values())
        succ: dict[int, list[int]] = {}
        for x, y in arcs:
            succ.setdefault(x, []).append(y)
        return all((x, z) in arcs
                   for x, y in arcs
                   for z in succ.get(y, ()))

    def solve(orient: dict[tuple[int, int], tuple[int, int]]) -> dict | None:
        for key in edges:
            if key not in orient:
                u, v = key
                for direction in ((u, v), (v, u)):
                    trial = dict(orient)
                    trial[key] = direction
                    if propagate(trial, [direction]) and (res := solve(trial)) is not None:
                        return res
                return None
        return orient if is_transitive(orient) else None

    solution = solve({})
    if solution is None:
        return None
    return Poset(g.n, frozenset(solution.values()))


def underlying_comparability_graph(p: Poset) -> Graph:
    """Graph with an edge for every comparable pair of ``p``."""
    return Graph.from_edges(p.n, ((u, v) for u, v in p.relation))


def chain_length_coloring(p: Poset) -> Coloring:
    """Color each element by the length of the longest chain it tops.

    This is a proper coloring of the comparability graph and uses exactly
    clique-number-many colors.
    """
    memo: dict[int, int] = {}

    def height(v: int) -> int:
        if v not in memo:
            memo[v] = 1 + max((height(u) for u in p._pred[v]), default=0)
        return memo[v]

    return Coloring({v: height(v) for v in range(1, p.n + 1)})
