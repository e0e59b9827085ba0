"""1-factorizations: perfect-pair and flawless checks, enumeration, and the
exhaustive computation of the largest flawless-admitting degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional, Sequence

from .copies import enumerate_hamiltonian_cycles
from .errors import BudgetExceededError
from .genum import enumerate_graphs
from .graphs import Graph, bits

Edge = tuple[int, int]
Matching = tuple[Edge, ...]

DEFAULT_MAX_ORDER = 8


def _normalize_matching(host: Graph, m: Sequence[Edge]) -> frozenset[Edge]:
    edges = frozenset((min(u, v), max(u, v)) for u, v in m)
    covered: set[int] = set()
    for u, v in edges:
        if not host.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not in the host graph")
        if u in covered or v in covered:
            raise ValueError(f"edges overlap at vertex {u if u in covered else v}")
        covered.update((u, v))
    if covered != set(range(host.n)):
        raise ValueError("matching is not perfect")
    return edges


@dataclass(frozen=True)
class OneFactorization:
    """A partition of a k-regular graph's edges into k perfect matchings."""

    host: Graph
    factors: tuple[Matching, ...]

    def __post_init__(self):
        normalized = [_normalize_matching(self.host, m) for m in self.factors]
        all_edges: set[Edge] = set()
        for m in normalized:
            if all_edges & m:
                raise ValueError("factors share an edge")
            all_edges |= m
        if all_edges != set(self.host.edges()):
            raise ValueError("factors do not cover every edge")

    @property
    def k(self) -> int:
        return len(self.factors)

    def factor_sets(self) -> list[frozenset[Edge]]:
        return [frozenset((min(u, v), max(u, v)) for u, v in m) for m in self.factors]


@dataclass(frozen=True)
class FlawlessVerdict:
    is_perfect: bool
    is_flawless: bool
    bad_pair: Optional[tuple[int, int]]
    uncovered_cycle: Optional[tuple[int, ...]]
    hamiltonian_count: int


def is_perfect_pair(host: Graph, m1: Sequence[Edge], m2: Sequence[Edge]) -> bool:
    """True iff the union of two disjoint perfect matchings is one spanning cycle."""
    e1 = _normalize_matching(host, m1)
    e2 = _normalize_matching(host, m2)
    if e1 & e2:
        raise ValueError("matchings share an edge")
    union = Graph.from_edges(host.n, list(e1 | e2))
    return all(union.degree(v) == 2 for v in range(host.n)) and union.is_connected()


def check_flawless(host: Graph, fact: OneFactorization) -> FlawlessVerdict:
    """Perfect: every factor pair unions to a Hamiltonian cycle.  Flawless:
    additionally every Hamiltonian cycle of the host equals such a union."""
    if fact.host != host:
        raise ValueError("factorization belongs to a different host")
    sets = fact.factor_sets()
    k = len(sets)
    bad_pair = None
    for i in range(k):
        for j in range(i + 1, k):
            if not is_perfect_pair(host, tuple(sets[i]), tuple(sets[j])):
                bad_pair = (i, j)
                break
        if bad_pair:
            break
    is_perfect = bad_pair is None
    cycles = enumerate_hamiltonian_cycles(host) if host.n >= 3 else []
    pair_unions = {
        frozenset(sets[i] | sets[j]) for i in range(k) for j in range(i + 1, k)
    }
    uncovered = None
    for witness in cycles:
        if frozenset(witness.edge_set) not in pair_unions:
            uncovered = witness.vertices
            break
    return FlawlessVerdict(
        is_perfect,
        is_perfect and uncovered is None,
        bad_pair,
        uncovered,
        len(cycles),
    )


def enumerate_one_factorizations(
    host: Graph, budget: Optional[int] = None
) -> Iterator[OneFactorization]:
    """All edge partitions into perfect matchings, each partition once.

    Colors the edges in fixed order; the colors of the first vertex's
    incident edges are forced, which kills the k! orderings of the factors.
    """
    if host.n == 0:
        yield OneFactorization(host, ())
        return
    degrees = {host.degree(v) for v in range(host.n)}
    if len(degrees) != 1:
        raise ValueError("host must be regular")
    k = degrees.pop()
    if host.n % 2 and k > 0:
        raise ValueError("odd order admits no perfect matching")
    if k == 0:
        yield OneFactorization(host, ())
        return
    edges = sorted(host.edges())
    m = len(edges)
    color_of = [-1] * m
    used = [0] * host.n  # bitmask of colors present at each vertex
    nodes = 0

    def assign(idx: int) -> Iterator[OneFactorization]:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceededError(
                f"factorization enumeration exceeded {budget} nodes"
            )
        if idx == m:
            factors: list[list[Edge]] = [[] for _ in range(k)]
            for e_idx, (u, v) in enumerate(edges):
                factors[color_of[e_idx]].append((u, v))
            yield OneFactorization(host, tuple(tuple(f) for f in factors))
            return
        u, v = edges[idx]
        free = ~(used[u] | used[v]) & ((1 << k) - 1)
        if idx < k:  # symmetry break: i-th edge at vertex 0 gets color i
            free &= 1 << idx
        for c in bits(free):
            color_of[idx] = c
            used[u] |= 1 << c
            used[v] |= 1 << c
            yield from assign(idx + 1)
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
        color_of[idx] = -1

    yield from assign(0)


def has_flawless_1f(
    host: Graph, budget: Optional[int] = None
) -> Optional[OneFactorization]:
    """A witness factorization passing the flawless check, if one exists.

    Prunes immediately unless the Hamiltonian cycle count equals C(k,2):
    distinct factor pairs give distinct Hamiltonian cycles, and flawlessness
    forbids any further ones.
    """
    degrees = {host.degree(v) for v in range(host.n)}
    if len(degrees) != 1:
        raise ValueError("host must be regular")
    k = degrees.pop()
    if host.n % 2:
        return None
    needed = comb(k, 2)
    if host.n >= 3:
        found = len(enumerate_hamiltonian_cycles(host, limit=needed + 1))
        if found != needed:
            return None
    for fact in enumerate_one_factorizations(host, budget=budget):
        verdict = check_flawless(host, fact)
        if verdict.is_flawless:
            return fact
    return None


@dataclass
class FSearchResult:
    value: int
    witness: OneFactorization
    per_k: dict[int, dict] = field(default_factory=dict)


def _k_candidates(n: int, k: int) -> list[Graph]:
    """Regular graphs passing the Hamiltonian count filter, enumeration order."""
    needed = comb(k, 2)
    survivors = []
    for g in enumerate_graphs(n, "regular", k):
        if g.n >= 3:
            found = len(enumerate_hamiltonian_cycles(g, limit=needed + 1))
            if found != needed:
                continue
        survivors.append(g)
    return survivors


def _flawless_scan_task(args) -> Optional[int]:
    """Worker task: first index in my slice whose graph admits a flawless
    factorization (indices ascend, so the first hit is the slice minimum)."""
    graphs, indices, budget = args
    for idx in indices:
        if has_flawless_1f(graphs[idx], budget=budget) is not None:
            return idx
    return None


def f_of_n(
    n: int,
    k_range: Optional[Sequence[int]] = None,
    max_order: int = DEFAULT_MAX_ORDER,
    budget: Optional[int] = None,
    workers: int = 1,
) -> FSearchResult:
    """Largest k for which some k-regular n-vertex graph admits a flawless
    1-factorization, scanning k from n-1 downward."""
    if n % 2 or n < 4:
        raise ValueError("n must be an even integer >= 4")
    if n > max_order:
        raise BudgetExceededError(
            f"order {n} exceeds the configured search budget {max_order}"
        )
    ks = sorted(k_range, reverse=True) if k_range else list(range(n - 1, 0, -1))
    per_k: dict[int, dict] = {}
    for k in ks:
        candidates = list(enumerate_graphs(n, "regular", k))
        survivors = _k_candidates(n, k)
        stats = {
            "classes": len(candidates),
            "after_hamiltonian_prune": len(survivors),
            "witness_found": False,
        }
        per_k[k] = stats
        hit = _scan_survivors(survivors, budget, workers)
        if hit is not None:
            stats["witness_found"] = True
            witness = has_flawless_1f(survivors[hit], budget=budget)
            assert witness is not None
            return FSearchResult(k, witness, per_k)
    raise RuntimeError("no flawless factorization found for any degree")


def _scan_survivors(
    survivors: list[Graph], budget: Optional[int], workers: int
) -> Optional[int]:
    if not survivors:
        return None
    if workers <= 1:
        return _flawless_scan_task((survivors, list(range(len(survivors))), budget))
    from concurrent.futures import ProcessPoolExecutor

    slices = [
        (survivors, list(range(w, len(survivors), workers)), budget)
        for w in range(workers)
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        hits = [h for h in pool.map(_flawless_scan_task, slices) if h is not None]
    return min(hits) if hits else None
