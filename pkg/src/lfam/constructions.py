"""Generators for the extremal graphs, each with verification metadata.

Every generator returns the graph together with its intended intersection
spec, a labelled vertex partition, and the expected number of induced
pattern copies (None when only the generic counter can settle it).  The
counts and intersection properties are verified downstream, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .family import IntersectionSpec
from .graphs import Graph, complete_multipartite, join, complete

Matching = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ConstructionOutput:
    graph: Graph
    spec: IntersectionSpec
    parts: dict[str, tuple[int, ...]]
    expected_count: Optional[int]
    actual_order: int
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        seen: set[int] = set()
        for label, group in self.parts.items():
            for v in group:
                if v in seen:
                    raise ValueError(f"part label {label} reuses vertex {v}")
                seen.add(v)
        if seen != set(range(self.graph.n)):
            raise ValueError("part labels must partition the vertex set")
        if self.actual_order != self.graph.n:
            raise ValueError("actual_order must match the graph order")


def turan(n: int, t: int) -> Graph:
    """Balanced complete t-partite graph on n vertices."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    big = n % t
    sizes = [n // t + 1] * big + [n // t] * (t - big)
    return complete_multipartite(sizes)


def turan_part_sizes(n: int, t: int) -> list[int]:
    big = n % t
    return [n // t + 1] * big + [n // t] * (t - big)


def clique_join_turan(t: int, r_minus_t: int, n: int) -> ConstructionOutput:
    """Join of a t-clique with a balanced (r-t)-partite graph."""
    if t < 1 or r_minus_t < 2 or n <= t + r_minus_t:
        raise ValueError("need t >= 1, r-t >= 2 and n > r")
    r = t + r_minus_t
    base = turan(n - t, r_minus_t)
    g = join(complete(t), base)
    sizes = turan_part_sizes(n - t, r_minus_t)
    parts = {"W": tuple(range(t))}
    offset = t
    expected = 1
    for i, size in enumerate(sizes, start=1):
        parts[f"U{i}"] = tuple(range(offset, offset + size))
        offset += size
        expected *= size
    return ConstructionOutput(
        g,
        IntersectionSpec(r, range(t, r)),
        parts,
        expected,
        g.n,
        "clique-join-turan",
        {"t": t, "r": r, "n": n},
    )


def _default_singleton_positions(r: int, l1: int) -> set[int]:
    return {1 + (j * r) // l1 for j in range(l1)}


def cycle_blowup(
    l1: int, s: int, n: int, singleton_positions: Optional[Iterable[int]] = None
) -> ConstructionOutput:
    """Cyclic blow-up with l1 singleton groups and s equal groups.

    Only valid for cycles of length at least 5 (or the degenerate plain
    cycle); shorter cases need the dedicated four-cycle generators.
    """
    r = l1 + s
    if l1 < 1 or s < 2 or r < 4:
        raise ValueError("need l1 >= 1, s >= 2 and l1 + s >= 4")
    positions = (
        _default_singleton_positions(r, l1)
        if singleton_positions is None
        else set(singleton_positions)
    )
    if len(positions) != l1 or not positions <= set(range(1, r + 1)):
        raise ValueError(f"singleton positions must be {l1} values in 1..{r}")
    m = (n - l1) // s
    if m < 1:
        raise ValueError(f"order {n} too small for {s} groups")
    if r == 4 and m > 1:
        raise ValueError(
            "a blown-up four-cycle needs a dedicated generator; "
            "use cycle_blowup_22 or cycle_blowup_13"
        )
    sizes = [1 if i in positions else m for i in range(1, r + 1)]
    order = sum(sizes)
    groups = []
    offset = 0
    for size in sizes:
        groups.append(tuple(range(offset, offset + size)))
        offset += size
    edges = []
    for i in range(r):
        for u in groups[i]:
            for v in groups[(i + 1) % r]:
                edges.append((u, v))
    g = Graph.from_edges(order, edges)
    parts = {f"U{i + 1}": groups[i] for i in range(r)}
    return ConstructionOutput(
        g,
        IntersectionSpec(r, range(l1, l1 + s)),
        parts,
        m**s,
        order,
        "cycle-blowup",
        {"l1": l1, "s": s, "n": n, "positions": sorted(positions)},
    )


def cycle_blowup_22(n: int) -> ConstructionOutput:
    """Blown-up four-cycle with two opposite singletons: K_{2,n-2}."""
    if n < 5:
        raise ValueError("need n >= 5")
    edges = [(0, v) for v in range(2, n)] + [(1, v) for v in range(2, n)]
    g = Graph.from_edges(n, edges)
    parts = {"W": (0, 1), "X": tuple(range(2, n))}
    return ConstructionOutput(
        g,
        IntersectionSpec(4, (2, 3)),
        parts,
        comb(n - 2, 2),
        n,
        "cycle-blowup-22",
        {"n": n},
    )


def cycle_blowup_13(n: int) -> ConstructionOutput:
    """Blown-up four-cycle with one singleton and a clique on the far group."""
    if n < 7:
        raise ValueError("need n >= 7")
    m = (n - 1) // 3
    order = 1 + 3 * m
    u1 = (0,)
    u2 = tuple(range(1, 1 + m))
    u3 = tuple(range(1 + m, 1 + 2 * m))
    u4 = tuple(range(1 + 2 * m, 1 + 3 * m))
    edges = []
    for a, b in ((u1, u2), (u2, u3), (u3, u4), (u4, u1)):
        edges += [(x, y) for x in a for y in b]
    edges += list(combinations(u3, 2))
    g = Graph.from_edges(order, edges)
    expected = m**3 + 2 * comb(m, 2) * m
    return ConstructionOutput(
        g,
        IntersectionSpec(4, (1, 2, 3)),
        {"U1": u1, "U2": u2, "U3": u3, "U4": u4},
        expected,
        order,
        "cycle-blowup-13",
        {"n": n, "m": m},
    )


def _flanked_doubling(l1: int, s: int, positions: set[int]) -> bool:
    """A bundle flanked by two singletons doubles the count exactly when
    a two-singleton, two-bundle tour already has full length (l1 = s = 2)."""
    if (l1, s) != (2, 2):
        return False
    r = l1 + s
    for i in range(1, r + 1):
        if i not in positions:
            before = (i - 2) % r + 1
            after = i % r + 1
            if before in positions and after in positions:
                return True
    return False


def path_blowup(
    l1: int,
    s: int,
    d: int,
    n: int,
    positions: Optional[Iterable[int]] = None,
) -> ConstructionOutput:
    """Cyclic arrangement of singletons and bundles of k disjoint d-vertex paths.

    Consecutive groups are wired endpoint-to-endpoint: a singleton meets
    every start (next group) or every end (previous group); two adjacent
    bundles meet end-to-start completely.
    """
    if d < 2 or s < 2 or l1 < 1:
        raise ValueError("need d >= 2, s >= 2, l1 >= 1")
    total = l1 + s
    pos = set(range(1, l1 + 1)) if positions is None else set(positions)
    if len(pos) != l1 or not pos <= set(range(1, total + 1)):
        raise ValueError(f"positions must be {l1} values in 1..{total}")
    k = (n - l1) // (s * d)
    if k < 1:
        raise ValueError(f"order {n} too small for {s} bundles of {d}-vertex paths")
    r = l1 + s * d

    parts: dict[str, tuple[int, ...]] = {}
    singleton: dict[int, int] = {}
    bundles: dict[int, list[tuple[int, ...]]] = {}
    counter = 0
    edges: list[tuple[int, int]] = []
    for i in range(1, total + 1):
        if i in pos:
            singleton[i] = counter
            parts[f"W{i}"] = (counter,)
            counter += 1
        else:
            paths = []
            for j in range(1, k + 1):
                verts = tuple(range(counter, counter + d))
                counter += d
                edges += [(verts[a], verts[a + 1]) for a in range(d - 1)]
                paths.append(verts)
                parts[f"P{i}.{j}"] = verts
            bundles[i] = paths

    def starts(i):
        return [p[0] for p in bundles[i]]

    def ends(i):
        return [p[-1] for p in bundles[i]]

    for i in range(1, total + 1):
        nxt = i % total + 1
        if i in pos and nxt in pos:
            edges.append((singleton[i], singleton[nxt]))
        elif i in pos:
            edges += [(singleton[i], u) for u in starts(nxt)]
        elif nxt in pos:
            edges += [(u, singleton[nxt]) for u in ends(i)]
        else:
            edges += [(u, v) for u in ends(i) for v in starts(nxt)]

    g = Graph.from_edges(counter, edges)
    expected: Optional[int] = k**s
    if _flanked_doubling(l1, s, pos):
        expected = None  # symmetric tours double back; let the counter decide
    return ConstructionOutput(
        g,
        IntersectionSpec(r, [l1 + i * d for i in range(s)]),
        parts,
        expected,
        counter,
        "path-blowup",
        {"l1": l1, "s": s, "d": d, "n": n, "positions": sorted(pos), "k": k},
    )


def path_blowup_clique_s2(l1: int, d: int, n: int) -> ConstructionOutput:
    """Two-bundle variants whose copy count doubles asymptotically.

    l1=1 keeps one singleton and turns the far junction into a clique;
    l1=2 places the two singletons so both junctions are symmetric.
    """
    if l1 not in (1, 2):
        raise ValueError("l1 must be 1 or 2")
    if d < 2 or l1 >= 2 * d:
        raise ValueError("need d >= 2 and l1 < 2d")
    if l1 == 2:
        out = path_blowup(2, 2, d, n, positions=(1, 3))
        return ConstructionOutput(
            out.graph,
            out.spec,
            out.parts,
            None,
            out.actual_order,
            "path-blowup-clique",
            {"l1": l1, "d": d, "n": n, "k": out.params["k"]},
        )
    base = path_blowup(1, 2, d, n, positions=(1,))
    k = base.params["k"]
    junction = [base.parts[f"P2.{j}"][-1] for j in range(1, k + 1)]
    junction += [base.parts[f"P3.{j}"][0] for j in range(1, k + 1)]
    g = base.graph
    for u, v in combinations(junction, 2):
        if not g.has_edge(u, v):
            g = g.add_edge(u, v)
    return ConstructionOutput(
        g,
        base.spec,
        base.parts,
        None,
        base.actual_order,
        "path-blowup-clique",
        {"l1": l1, "d": d, "n": n, "k": k},
    )


def default_staircase_lengths(l: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest lengths summing to d with every entry >= 2."""
    if d < 2 * l:
        raise ValueError(f"cannot split {d} into {l} parts of at least 2")
    return tuple([2] * (l - 1) + [d - 2 * (l - 1)])


def staircase(
    l: int, d: int, n: int, path_lengths: Optional[Sequence[int]] = None
) -> ConstructionOutput:
    """Hub vertices with k pendant paths each, consecutive levels joined by a
    strictly triangular pattern on the path tips."""
    if l not in (3, 4):
        raise ValueError("l must be 3 or 4")
    if not 2 * l < d:
        raise ValueError(f"requires l < d/2, got l={l}, d={d}")
    p = (
        default_staircase_lengths(l, d)
        if path_lengths is None
        else tuple(int(x) for x in path_lengths)
    )
    if len(p) != l or sum(p) != d or any(x < 2 for x in p):
        raise ValueError(f"path lengths must be {l} values >= 2 summing to {d}")
    k = (n - l) // d
    if k < 2:
        raise ValueError(f"order {n} allows only {k} tips per hub; need at least 2")
    r = l + 2 * d
    order = l + k * d

    hubs = tuple(range(l))
    parts: dict[str, tuple[int, ...]] = {"W": hubs}
    counter = l
    edges: list[tuple[int, int]] = []
    tips: list[list[int]] = [[0] * (k + 1) for _ in range(l + 1)]
    for i in range(1, l + 1):
        for j in range(1, k + 1):
            # path of p[i-1] edges from hub i-1 out to tip v_j^(i)
            inner = tuple(range(counter, counter + p[i - 1]))
            counter += p[i - 1]
            chain = (hubs[i - 1],) + inner
            edges += [(chain[a], chain[a + 1]) for a in range(len(chain) - 1)]
            tips[i][j] = inner[-1]
            parts[f"P{i}.{j}"] = inner
    for t in range(1, l + 1):
        nxt = t % l + 1
        for j in range(2, k + 1):
            for i in range(1, j):
                edges.append((tips[t][j], tips[nxt][i]))
    g = Graph.from_edges(order, edges)
    return ConstructionOutput(
        g,
        IntersectionSpec(r, (l, l + d)),
        parts,
        comb(k, 2),
        order,
        "staircase",
        {"l": l, "d": d, "n": n, "p": list(p), "k": k},
    )


def flawless_triple(l: int) -> tuple[Graph, list[Matching]]:
    """A 3-regular graph on l vertices with three matchings forming a
    flawless 1-factorization (two rim matchings plus a chord matching)."""
    if l < 4 or l % 2:
        raise ValueError("l must be an even integer >= 4")
    u = list(range(l))  # paper-style 1-based names shifted down by one
    m1 = [(u[i], u[i + 1]) for i in range(0, l, 2)]
    m2 = [(u[i], u[i + 1]) for i in range(1, l - 1, 2)] + [(u[l - 1], u[0])]
    if l == 4:
        m3 = [(u[0], u[2]), (u[1], u[3])]
    else:
        m3 = [(u[0], u[2]), (u[3], u[5])]
        m3 += [(u[i - 1], u[i + 2]) for i in range(5, l - 2, 2)]
        m3 += [(u[l - 2], u[1])]
    matchings = [
        tuple(sorted((min(a, b), max(a, b)) for a, b in m)) for m in (m1, m2, m3)
    ]
    g = Graph.from_edges(l, [e for m in matchings for e in m])
    return g, matchings


def flawless_expansion(
    base: Graph,
    factorization: Sequence[Matching],
    d: int,
    k: int,
    cross_superscript: bool = True,
) -> ConstructionOutput:
    """Subdivide the base, inflate each subdivision vertex to a k-clique, and
    wire matching-mates across distinct clique indices.

    ``cross_superscript=False`` instead wires equal clique indices, an
    alternative reading whose output fails the intersection check; it is kept
    inspectable so the checker can arbitrate.
    """
    from .factorization import OneFactorization, check_flawless

    l = base.n
    if l != 2 * d:
        raise ValueError(f"base order {l} must equal 2d = {2 * d}")
    if k < 1:
        raise ValueError("k must be at least 1")
    fact = OneFactorization(base, tuple(tuple(m) for m in factorization))
    verdict = check_flawless(base, fact)
    if not verdict.is_flawless:
        raise ValueError("the supplied factorization is not flawless")

    base_edges = sorted(base.edges())
    matching_of: dict[tuple[int, int], int] = {}
    for idx, m in enumerate(fact.factors):
        for e in m:
            matching_of[tuple(sorted(e))] = idx

    order = l + k * len(base_edges)
    clique_vertices: dict[tuple[int, int], tuple[int, ...]] = {}
    counter = l
    edges: list[tuple[int, int]] = []
    parts: dict[str, tuple[int, ...]] = {"W": tuple(range(l))}
    for e in base_edges:
        verts = tuple(range(counter, counter + k))
        counter += k
        clique_vertices[e] = verts
        parts[f"B{e[0]}-{e[1]}"] = verts
        edges += list(combinations(verts, 2))
        for t in verts:
            edges.append((e[0], t))
            edges.append((e[1], t))
    for e1, e2 in combinations(base_edges, 2):
        if matching_of[e1] != matching_of[e2]:
            continue
        for t1 in range(k):
            for t2 in range(k):
                if (t1 != t2) == cross_superscript:
                    edges.append((clique_vertices[e1][t1], clique_vertices[e2][t2]))
    g = Graph.from_edges(order, edges)
    return ConstructionOutput(
        g,
        IntersectionSpec(4 * d, (2 * d, 3 * d)),
        parts,
        None,
        order,
        "flawless-expansion",
        {"l": l, "d": d, "k": k, "cross_superscript": cross_superscript},
    )
