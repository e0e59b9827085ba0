"""Immutable simple graphs on at most 64 vertices, stored as bitset adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphSizeError

MAX_VERTICES = 64


def bits(mask: int):
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbor bitmask of vertex v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(
                f"order {self.n} outside supported range 0..{MAX_VERTICES}"
            )
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
        for u in range(self.n):
            row = self.adj[u]
            for v in bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"adjacency is not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj))
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices`` relabelled densely in sorted order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            for u in bits(self.adj[v]):
                if u in index:
                    rows[i] |= 1 << index[u]
        return Graph(len(vs), tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"invalid edge ({u},{v})")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        rows = [row for row in self.adj]
        new = self.n
        for u in bits(neighbor_mask):
            rows[u] |= 1 << new
        rows.append(neighbor_mask)
        return Graph(self.n + 1, tuple(rows))

    def is_regular(self) -> bool:
        return self.n == 0 or len({row.bit_count() for row in self.adj}) == 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grown = seen
            for v in bits(frontier):
                grown |= self.adj[v]
            frontier = grown & ~seen
            seen = grown
        return seen == (1 << self.n) - 1


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive vertex ranges."""
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be nonnegative")
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [
        (u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]
    ]
    return Graph.from_edges(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))
