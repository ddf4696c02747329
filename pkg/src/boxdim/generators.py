"""Named instance families and seeded random instances.

Randomness comes from SplitMix64, a fixed 64-bit generator, so any seed plus
parameters reproduces an instance byte for byte across runs and versions.
Random relations and edges are drawn in lexicographic pair order, one draw
per pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .posets import Poset

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Seed:
    """64-bit unsigned seed."""

    value: int

    def __post_init__(self) -> None:
        if not (0 <= self.value <= _MASK64):
            raise ValueError("seed must fit in 64 unsigned bits")


class SplitMix64:
    """Deterministic 64-bit generator (SplitMix64 constants)."""

    def __init__(self, seed: Seed | int):
        self._state = (seed.value if isinstance(seed, Seed) else seed) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53


def crown(n: int) -> Poset:
    """Height-2 order with minimals a_1..a_n below every maximal except their twin.

    Elements 1..n are the minimals, n+i is the maximal paired with i.
    """
    if n < 3:
        raise ValueError("crown needs at least 3 element pairs")
    rel = frozenset((i, n + j)
                    for i in range(1, n + 1)
                    for j in range(1, n + 1)
                    if i != j)
    return Poset(2 * n, rel)


def complete_multipartite(k: int, q: int) -> tuple[Graph, Poset]:
    """Complete k-partite graph with parts of size q, plus its layer orientation.

    Vertices (i-1)*q+1 .. i*q form part i; u < v in the order exactly when
    u's part index is smaller.
    """
    if k < 2:
        raise ValueError("need at least 2 parts")
    if q < 1:
        raise ValueError("parts must be non-empty")
    n = k * q

    def part(v: int) -> int:
        return (v - 1) // q + 1

    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if part(u) != part(v)]
    rel = frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                    if part(u) < part(v))
    return Graph.from_edges(n, edges), Poset(n, rel)


def kn_minus_matching(n: int) -> tuple[Graph, Poset]:
    """Complete graph minus the perfect matching {2i-1, 2i}, with its layer order.

    Equals ``complete_multipartite(n // 2, 2)`` vertex for vertex.
    """
    if n < 4 or n % 2:
        raise ValueError("need an even number of vertices, at least 4")
    return complete_multipartite(n // 2, 2)


def hypercube(d: int) -> Graph:
    """Graph of d-bit strings adjacent at Hamming distance 1 (vertex v <-> bits of v-1)."""
    if not 1 <= d <= 10:
        raise ValueError("dimension must be between 1 and 10")
    n = 1 << d
    edges = [(v, ((v - 1) ^ (1 << b)) + 1)
             for v in range(1, n + 1)
             for b in range(d)
             if (v - 1) ^ (1 << b) > (v - 1)]
    return Graph.from_edges(n, edges)


def random_height2(n: int, p: float, seed: Seed | int) -> Poset:
    """Height-2 order: n minimals, n maximals, each a < b drawn independently.

    Pairs (a, b) are visited in lexicographic order, one draw per pair.
    """
    if n < 1:
        raise ValueError("need at least one element per side")
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    rel = frozenset((a, n + b)
                    for a in range(1, n + 1)
                    for b in range(1, n + 1)
                    if rng.next_float() < p)
    return Poset(2 * n, rel)


def random_graph(n: int, p: float, seed: Seed | int) -> Graph:
    """Graph with each pair {u, v} present independently with probability p."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [(u, v)
             for u in range(1, n + 1)
             for v in range(u + 1, n + 1)
             if rng.next_float() < p]
    return Graph.from_edges(n, edges)
