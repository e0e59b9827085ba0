"""Pattern-copy enumeration (induced and spanning) and Hamiltonian cycles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graphs import Graph, bits


@dataclass(frozen=True)
class CycleWitness:
    """One Hamiltonian cycle: its vertex sequence and its edge set."""

    vertices: tuple[int, ...]
    edge_set: frozenset[tuple[int, int]]


def _placement_order(pattern: Graph) -> list[int]:
    """Order pattern vertices so each one touches as many placed ones as possible."""
    if pattern.n == 0:
        return []
    order = []
    placed_mask = 0
    remaining = set(range(pattern.n))
    while remaining:
        best = max(
            remaining,
            key=lambda v: ((pattern.adj[v] & placed_mask).bit_count(), pattern.degree(v), -v),
        )
        order.append(best)
        placed_mask |= 1 << best
        remaining.remove(best)
    return order


def _induced_set_masks(host: Graph, pattern: Graph) -> set[int]:
    """Bitmask vertex sets S of the host with host[S] isomorphic to the pattern."""
    if pattern.n > host.n:
        return set()
    if pattern.n == 0:
        return {0}
    order = _placement_order(pattern)
    # For step i, the pattern adjacency of order[i] to each earlier vertex.
    adj_flags = []
    for i, p in enumerate(order):
        adj_flags.append([bool((pattern.adj[p] >> order[j]) & 1) for j in range(i)])
    full = (1 << host.n) - 1
    found: set[int] = set()
    images = [0] * pattern.n

    def extend(i: int, used: int):
        if i == pattern.n:
            found.add(used)
            return
        cand = full & ~used
        for j in range(i):
            row = host.adj[images[j]]
            cand &= row if adj_flags[i][j] else ~row
            if not cand:
                return
        for v in bits(cand):
            images[i] = v
            extend(i + 1, used | (1 << v))

    extend(0, 0)
    return found


def enumerate_induced_copies(host: Graph, pattern: Graph) -> list[tuple[int, ...]]:
    """All vertex sets inducing a copy of the pattern, each exactly once."""
    masks = _induced_set_masks(host, pattern)
    return sorted(tuple(bits(m)) for m in masks)


def _span_embeddings(host: Graph, pattern: Graph):
    """Yield used-vertex masks of edge-preserving injections pattern -> host."""
    if pattern.n > host.n:
        return
    if pattern.n == 0:
        yield 0
        return
    order = _placement_order(pattern)
    adj_prev = []
    for i, p in enumerate(order):
        adj_prev.append([j for j in range(i) if (pattern.adj[p] >> order[j]) & 1])
    full = (1 << host.n) - 1
    images = [0] * pattern.n

    def extend(i: int, used: int):
        if i == pattern.n:
            yield used
            return
        cand = full & ~used
        for j in adj_prev[i]:
            cand &= host.adj[images[j]]
            if not cand:
                return
        for v in bits(cand):
            images[i] = v
            yield from extend(i + 1, used | (1 << v))

    yield from extend(0, 0)


def span_copy_sets(host: Graph, pattern: Graph) -> list[tuple[int, ...]]:
    """Vertex sets S with |S| = pattern order whose induced graph contains the pattern."""
    masks = set(_span_embeddings(host, pattern))
    return sorted(tuple(bits(m)) for m in masks)


@lru_cache(maxsize=256)
def _automorphism_count(pattern: Graph) -> int:
    return sum(1 for _ in _span_embeddings(pattern, pattern))


def count_copies(host: Graph, pattern: Graph, mode: str = "induced") -> int:
    """Number of pattern copies: induced vertex sets, or spanning subgraph copies.

    Span mode counts labelled edge-preserving embeddings divided by the
    pattern's automorphism count.
    """
    if mode == "induced":
        return len(_induced_set_masks(host, pattern))
    if mode == "span":
        total = sum(1 for _ in _span_embeddings(host, pattern))
        if total == 0:
            return 0
        return total // _automorphism_count(pattern)
    raise ValueError(f"unknown mode {mode!r}, expected 'induced' or 'span'")


def enumerate_hamiltonian_cycles(
    g: Graph, limit: Optional[int] = None
) -> list[CycleWitness]:
    """All Hamiltonian cycles, one witness per distinct edge set.

    ``limit`` stops the search once that many cycles are found (used by
    callers that only need to compare the count against a threshold).
    """
    if g.n < 3:
        raise ValueError("Hamiltonian cycles need at least 3 vertices")
    if any(row.bit_count() < 2 for row in g.adj):
        return []
    results: list[CycleWitness] = []
    path = [0]
    target = (1 << g.n) - 1

    def rec(used: int) -> bool:
        v = path[-1]
        if used == target:
            if (g.adj[v] >> 0) & 1 and path[1] < path[-1]:
                edges = frozenset(
                    (min(a, b), max(a, b))
                    for a, b in zip(path, path[1:] + [path[0]])
                )
                results.append(CycleWitness(tuple(path), edges))
                if limit is not None and len(results) >= limit:
                    return True
            return False
        for u in bits(g.adj[v] & ~used):
            path.append(u)
            if rec(used | (1 << u)):
                return True
            path.pop()
        return False

    rec(1)
    return results


def count_hamiltonian_cycles(g: Graph, limit: Optional[int] = None) -> int:
    if g.n < 3:
        return 0
    return len(enumerate_hamiltonian_cycles(g, limit=limit))
