"""Isomorphism-free graph enumeration by canonical augmentation.

Graphs are grown one vertex at a time.  A child is kept only when its newest
vertex lies in the same automorphism orbit as the vertex the canonical
labelling would delete, so every isomorphism class is produced exactly once
without a global dedup table.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Sequence

from .canon import canonical_form, marked_key
from .errors import BudgetExceededError
from .graphs import Graph, bits, empty

DEFAULT_MAX_ORDER_ALL = 10
DEFAULT_MAX_ORDER_REGULAR = 12


def _canonical_parent_ok(child: Graph) -> bool:
    """True when the newest vertex is orbit-equivalent to the canonical deletee."""
    new = child.n - 1
    relabeling = canonical_form(child).relabeling
    deletee = relabeling.index(child.n - 1)
    if deletee == new:
        return True
    return marked_key(child, new) == marked_key(child, deletee)


def _degree_filter_ok(
    g: Graph, order: int, dmax: int, exact_degree: Optional[int]
) -> bool:
    """Necessary conditions for extending g to a valid graph on ``order`` vertices.

    With an exact target degree, every vertex may still gain at most one edge
    per future vertex, so a degree deficit larger than the remaining vertex
    count is fatal.  Both checks are closed under vertex deletion, which
    canonical augmentation requires.
    """
    if any(g.degree(v) > dmax for v in range(g.n)):
        return False
    if exact_degree is not None:
        remaining = order - g.n
        for v in range(g.n):
            if exact_degree - g.degree(v) > remaining:
                return False
    return True


def _children(
    parent: Graph, order: int, dmax: int, exact_degree: Optional[int]
) -> Iterator[Graph]:
    allowed = [v for v in range(parent.n) if parent.degree(v) < dmax]
    seen_keys: set[bytes] = set()
    max_new_degree = min(dmax, len(allowed))
    for size in range(max_new_degree + 1):
        for combo in combinations(allowed, size):
            neighbor_mask = 0
            for v in combo:
                neighbor_mask |= 1 << v
            child = parent.add_vertex(neighbor_mask)
            if not _degree_filter_ok(child, order, dmax, exact_degree):
                continue
            key = canonical_form(child).key
            if key in seen_keys:
                continue
            seen_keys.add(key)
            if _canonical_parent_ok(child):
                yield child


def _final_ok(g: Graph, constraint, value) -> bool:
    if constraint == "all":
        return True
    if constraint == "regular":
        return all(g.degree(v) == value for v in range(g.n))
    if constraint == "degree_sequence":
        return g.degree_sequence() == tuple(sorted(value))
    raise ValueError(f"unknown constraint {constraint!r}")


def enumerate_graphs(
    order: int,
    constraint: str = "all",
    value=None,
    max_order: Optional[int] = None,
) -> Iterator[Graph]:
    """Stream one representative per isomorphism class, in deterministic order.

    ``constraint`` is "all", "regular" (value = degree), or "degree_sequence"
    (value = sorted degree multiset).  Restartable: a fresh call replays the
    same sequence.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    exact_degree: Optional[int] = None
    if constraint == "all":
        cap = DEFAULT_MAX_ORDER_ALL if max_order is None else max_order
        dmax = max(order - 1, 0)
    elif constraint == "regular":
        cap = DEFAULT_MAX_ORDER_REGULAR if max_order is None else max_order
        if value is None or not 0 <= value <= max(order - 1, 0):
            raise ValueError(f"regular degree {value!r} out of range for order {order}")
        dmax = value
        exact_degree = value
    elif constraint == "degree_sequence":
        cap = DEFAULT_MAX_ORDER_ALL if max_order is None else max_order
        seq = tuple(sorted(value))
        if len(seq) != order or any(not 0 <= d < order for d in seq):
            raise ValueError(f"degree sequence {value!r} invalid for order {order}")
        if sum(seq) % 2:
            return
        dmax = seq[-1]
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
    if order > cap:
        raise BudgetExceededError(
            f"order {order} exceeds enumeration budget {cap} for constraint {constraint}"
        )
    if order == 0:
        yield empty(0)
        return

    def dfs(g: Graph) -> Iterator[Graph]:
        if g.n == order:
            if _final_ok(g, constraint, value):
                yield g
            return
        for child in _children(g, order, dmax, exact_degree):
            yield from dfs(child)

    yield from dfs(empty(1))


def count_graphs(order: int, constraint: str = "all", value=None) -> int:
    return sum(1 for _ in enumerate_graphs(order, constraint, value))
