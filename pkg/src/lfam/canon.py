"""Canonical labelling and isomorphism tests.

Strategy: iterated neighborhood refinement plus backtracking over the first
non-singleton cell, tie-broken by the lexicographically smallest adjacency
bit matrix.  Automorphisms discovered along the way prune equivalent
branches, which keeps highly symmetric graphs (complete graphs, blow-ups)
tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, MAX_VERTICES, bits
from .errors import GraphSizeError


@dataclass(frozen=True)
class CanonicalForm:
    """A total-order key plus one relabelling that realizes it.

    ``relabeling[v]`` is the canonical label of original vertex v; relabelling
    the graph accordingly and re-encoding reproduces ``key``.
    """

    key: bytes
    relabeling: tuple[int, ...]


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; sub-cells are ordered by their split keys."""
    cells = [list(c) for c in cells]
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                new_cells.append(keyed[key])
        cells = new_cells
        if not changed:
            return cells


def _encode(adj: Sequence[int], n: int, order: Sequence[int]) -> bytes:
    """Upper-triangle bit matrix of the graph relabelled by ``order``."""
    acc = 0
    nbits = 0
    for i in range(n):
        oi = order[i]
        for j in range(i + 1, n):
            acc = (acc << 1) | ((adj[oi] >> order[j]) & 1)
            nbits += 1
    pad = (-nbits) % 8
    acc <<= pad
    return bytes([n]) + acc.to_bytes((nbits + pad) // 8, "big")


class _CanonSearch:
    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.best_key: Optional[bytes] = None
        self.best_order: Optional[list[int]] = None
        self.autos: list[tuple[int, ...]] = []

    def run(self, initial_cells: list[list[int]]):
        self._descend(initial_cells, [])
        return self.best_key, self.best_order

    def _descend(self, cells: list[list[int]], fixed: list[int]):
        cells = _refine(self.adj, cells)
        target_idx = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target_idx = i
                break
        if target_idx is None:
            order = [cell[0] for cell in cells]
            key = _encode(self.adj, self.n, order)
            if self.best_key is None or key < self.best_key:
                self.best_key = key
                self.best_order = order
            elif key == self.best_key:
                mapping = [0] * self.n
                for pos in range(self.n):
                    mapping[self.best_order[pos]] = order[pos]
                self.autos.append(tuple(mapping))
            return
        target = sorted(cells[target_idx])
        done: list[int] = []
        for v in target:
            if done and self._in_explored_orbit(v, done, fixed):
                continue
            child = (
                cells[:target_idx]
                + [[v], [u for u in target if u != v]]
                + cells[target_idx + 1 :]
            )
            self._descend(child, fixed + [v])
            done.append(v)

    def _in_explored_orbit(self, v: int, done: list[int], fixed: list[int]) -> bool:
        gens = [a for a in self.autos if all(a[x] == x for x in fixed)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for x in range(self.n):
                rx, ry = find(x), find(a[x])
                if rx != ry:
                    parent[ry] = rx
        roots = {find(u) for u in done}
        return find(v) in roots


def _canon_key(adj: Sequence[int], n: int, initial_cells=None) -> tuple[bytes, tuple[int, ...]]:
    if initial_cells is None:
        initial_cells = [list(range(n))] if n else []
    search = _CanonSearch(adj, n)
    key, order = search.run(initial_cells)
    if n == 0:
        return bytes([0]), ()
    relabeling = [0] * n
    for pos, v in enumerate(order):
        relabeling[v] = pos
    return key, tuple(relabeling)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical key and relabelling; equal keys iff isomorphic graphs."""
    if g.n > MAX_VERTICES:
        raise GraphSizeError(f"order {g.n} exceeds cap {MAX_VERTICES}")
    key, relabeling = _canon_key(g.adj, g.n)
    return CanonicalForm(key, relabeling)


def marked_key(g: Graph, v: int) -> bytes:
    """Canonical key of the graph with vertex ``v`` singled out by color.

    Two vertices yield equal marked keys iff they lie in the same orbit of
    the automorphism group.
    """
    rest = [u for u in range(g.n) if u != v]
    cells = [[v]] + ([rest] if rest else [])
    key, _ = _canon_key(g.adj, g.n, cells)
    return key


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits under the automorphism group, grouped by marked key."""
    groups: dict[bytes, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(marked_key(g, v), []).append(v)
    return sorted(groups.values())


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1).key == canonical_form(g2).key
