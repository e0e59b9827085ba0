"""Exact maximum clique by branch and bound with greedy-coloring bounds."""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import BudgetExceededError
from .graphs import bits


class CliqueSearch:
    """Tomita-style search over bitset adjacency rows.

    Vertices are pre-sorted by degeneracy order; candidate sets are colored
    greedily and expanded largest-color-first, pruning branches whose bound
    cannot beat the incumbent.  Node counts make budgets machine independent.
    """

    def __init__(self, neighbors: Sequence[int], budget: Optional[int] = None):
        self.m = len(neighbors)
        self.order = _degeneracy_order(neighbors)
        pos = {v: i for i, v in enumerate(self.order)}
        self.adj = [0] * self.m
        for v, row in enumerate(neighbors):
            mask = 0
            for u in bits(row):
                mask |= 1 << pos[u]
            self.adj[pos[v]] = mask
        self.budget = budget
        self.nodes = 0
        self.best_size = 0
        self.best_clique: list[int] = []

    def run(self, lower_bound: int = 0) -> tuple[int, list[int]]:
        """Maximum clique size and one witness; honors ``lower_bound`` for pruning.

        When the true maximum is at most ``lower_bound`` the witness list is
        empty and the returned size equals ``lower_bound``.
        """
        self.best_size = lower_bound
        self.best_clique = []
        full = (1 << self.m) - 1
        self._expand([], full)
        witness = sorted(self.order[i] for i in self.best_clique)
        return self.best_size, witness

    def _expand(self, clique: list[int], cand: int):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(
                f"clique search exceeded {self.budget} nodes",
                partial={"best_size": self.best_size, "nodes": self.nodes},
            )
        if not cand:
            if len(clique) > self.best_size:
                self.best_size = len(clique)
                self.best_clique = list(clique)
            return
        colored = _greedy_color(self.adj, cand)
        for v, color in reversed(colored):
            if len(clique) + color <= self.best_size:
                return
            clique.append(v)
            self._expand(clique, cand & self.adj[v])
            clique.pop()
            cand &= ~(1 << v)


def _degeneracy_order(neighbors: Sequence[int]) -> list[int]:
    m = len(neighbors)
    alive = (1 << m) - 1
    degs = [row.bit_count() for row in neighbors]
    order = []
    for _ in range(m):
        v = min((u for u in bits(alive)), key=lambda u: (degs[u], u))
        order.append(v)
        alive &= ~(1 << v)
        for u in bits(neighbors[v] & alive):
            degs[u] -= 1
    return order


def _greedy_color(adj: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Color candidates greedily; returns (vertex, color) sorted by color."""
    color_classes: list[int] = []
    result = []
    for v in bits(cand):
        row = adj[v]
        for c, cls in enumerate(color_classes):
            if not (cls & row):
                color_classes[c] = cls | (1 << v)
                result.append((v, c + 1))
                break
        else:
            color_classes.append(1 << v)
            result.append((v, len(color_classes)))
    result.sort(key=lambda vc: (vc[1], vc[0]))
    return result


def max_clique(
    neighbors: Sequence[int], budget: Optional[int] = None, lower_bound: int = 0
) -> tuple[int, list[int], int]:
    """Exact maximum clique: (size, witness vertices, nodes explored)."""
    search = CliqueSearch(neighbors, budget=budget)
    size, witness = search.run(lower_bound)
    return size, witness, search.nodes
