"""Exact small-scale optimizers and construction verification.

The family-size optimum is a maximum clique over the subset-compatibility
graph; the copy-count optimum is an exhaustive scan over isomorphism classes
of host graphs.  Both split work over disjoint task slices so results do not
depend on the worker count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from . import family as fam_mod
from .canon import canonical_form
from .cliques import CliqueSearch
from .copies import count_copies
from .errors import BudgetExceededError
from .family import IntersectionSpec, SetFamily, associated_family, atom_decomposition
from .genum import enumerate_graphs
from .graphs import Graph, bits, cycle, mask_of

DEFAULT_COMPAT_CAP = 2000
DEFAULT_PSI_MAX_ORDER = 9


@dataclass
class SearchOutcome:
    value: int
    witnesses: list
    nodes_explored: int
    budget_exhausted: bool = False


# ---------------------------------------------------------------------------
# Maximum family size over all r-subset families with allowed intersections


def _compat_rows(n: int, spec: IntersectionSpec) -> tuple[list[tuple[int, ...]], list[int]]:
    subsets = list(combinations(range(n), r=spec.r))
    masks = [mask_of(s) for s in subsets]
    allowed = set(spec.L)
    rows = [0] * len(subsets)
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            if (masks[i] & masks[j]).bit_count() in allowed:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return subsets, rows


def _phi_subproblem(args) -> tuple[int, int, list[int], int]:
    """Exact max clique containing ``root``, candidates restricted to later
    vertices; the smallest clique member acts as the root, so the subproblems
    jointly cover every clique."""
    rows, root, lower = args
    later = [j for j in bits(rows[root]) if j > root]
    if not later:
        return 1, root, [root], 1
    index = {v: i for i, v in enumerate(later)}
    later_mask = 0
    for v in later:
        later_mask |= 1 << v
    sub_rows = [0] * len(later)
    for v in later:
        packed = 0
        for u in bits(rows[v] & later_mask):
            packed |= 1 << index[u]
        sub_rows[index[v]] = packed
    search = CliqueSearch(sub_rows)
    size, witness = search.run(max(lower - 1, 0))
    if not witness:
        return 0, root, [], search.nodes
    return 1 + size, root, sorted([root] + [later[i] for i in witness]), search.nodes


def max_intersecting_family(
    n: int,
    spec: IntersectionSpec,
    compat_cap: int = DEFAULT_COMPAT_CAP,
    budget: Optional[int] = None,
    workers: int = 1,
    witness_cap: int = 1,
) -> SearchOutcome:
    """Exact maximum size of an n-vertex family of r-subsets whose pairwise
    intersections all lie in spec.L, with one witness family."""
    if n < spec.r:
        raise ValueError("ground size below the uniformity")
    from math import comb

    if comb(n, spec.r) > compat_cap:
        raise BudgetExceededError(
            f"compatibility graph would have {comb(n, spec.r)} vertices, cap {compat_cap}"
        )
    subsets, rows = _compat_rows(n, spec)
    m = len(rows)
    best = (0, m, [])  # (size, root, clique); smaller root wins ties
    nodes = 0
    if workers <= 1:
        for root in range(m):
            size, _, witness, used = _phi_subproblem((rows, root, best[0]))
            nodes += used
            if budget is not None and nodes > budget:
                raise BudgetExceededError(
                    f"search exceeded {budget} nodes",
                    partial={"best_size": best[0], "nodes": nodes},
                )
            if witness and size > best[0]:
                best = (size, root, witness)
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                _phi_subproblem, [(rows, root, 0) for root in range(m)]
            )
            for size, root, witness, used in results:
                nodes += used
                if witness and (
                    size > best[0] or (size == best[0] and root < best[1])
                ):
                    best = (size, root, witness)
    witnesses = []
    if best[2]:
        witnesses.append(SetFamily.from_sets(n, [subsets[i] for i in best[2]]))
    return SearchOutcome(best[0], witnesses[:witness_cap], nodes)


# ---------------------------------------------------------------------------
# Maximum pattern-copy count over graphs with an L-intersecting copy family


def _copy_count_and_ok(
    g: Graph, pattern: Graph, spec: IntersectionSpec, mode: str, min_core: int
) -> Optional[int]:
    fam = associated_family(g, pattern, mode)
    ok, _ = fam_mod.is_l_intersecting(fam, spec)
    if not ok:
        return None
    if min_core > 0 and fam.edges:
        if len(fam_mod.common_core(fam)) < min_core:
            return None
    if mode == "induced":
        return len(fam.edges)
    return count_copies(g, pattern, "span")


def _psi_task(args) -> tuple[int, Optional[bytes], Optional[Graph], int]:
    n, pattern, spec, mode, min_core, offset, stride, max_order = args
    best_value = -1
    best_key: Optional[bytes] = None
    best_graph: Optional[Graph] = None
    examined = 0
    for idx, g in enumerate(enumerate_graphs(n, "all", max_order=max_order)):
        if idx % stride != offset:
            continue
        examined += 1
        value = _copy_count_and_ok(g, pattern, spec, mode, min_core)
        if value is None:
            continue
        if value > best_value:
            best_value = value
            best_key = canonical_form(g).key
            best_graph = g
        elif value == best_value:
            key = canonical_form(g).key
            if best_key is None or key < best_key:
                best_key = key
                best_graph = g
    return best_value, best_key, best_graph, examined


def max_pattern_count(
    n: int,
    pattern: Graph,
    spec: IntersectionSpec,
    mode: str = "induced",
    min_core: int = 0,
    max_order: int = DEFAULT_PSI_MAX_ORDER,
    workers: int = 1,
    witness_cap: int = 1,
) -> SearchOutcome:
    """Exact maximum copy count over all n-vertex hosts whose copy family is
    L-intersecting (and shares at least ``min_core`` common vertices)."""
    if pattern.n != spec.r:
        raise ValueError("pattern order must equal the spec uniformity")
    if n > max_order:
        raise BudgetExceededError(
            f"order {n} exceeds the enumeration budget {max_order}"
        )
    tasks = [
        (n, pattern, spec, mode, min_core, w, max(workers, 1), max_order)
        for w in range(max(workers, 1))
    ]
    if workers <= 1:
        results = [_psi_task(tasks[0])]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_psi_task, tasks))
    best_value, best_key, best_graph = -1, None, None
    examined = 0
    for value, key, g, count in results:
        examined += count
        if value > best_value or (
            value == best_value and key is not None and (best_key is None or key < best_key)
        ):
            best_value, best_key, best_graph = value, key, g
    witnesses = [best_graph] if best_graph is not None else []
    return SearchOutcome(best_value, witnesses[:witness_cap], examined)


# ---------------------------------------------------------------------------
# Block-aligned cycle counting and construction verification


@dataclass(frozen=True)
class BlockPartition:
    """A vertex split (x, y) with x carved into equal-size blocks."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = [v for b in self.blocks for v in b]
        if len(set(flat)) != len(flat) or set(flat) != set(self.x):
            raise ValueError("blocks must partition x")
        if set(self.x) & set(self.y):
            raise ValueError("x and y must be disjoint")
        sizes = {len(b) for b in self.blocks}
        if len(sizes) > 1:
            raise ValueError("blocks must have equal sizes")


def _is_induced_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    sub = g.induced(vertices)
    return (
        sub.n >= 3
        and all(sub.degree(v) == 2 for v in range(sub.n))
        and sub.is_connected()
    )


def count_block_cycles(g: Graph, part: BlockPartition, r: int) -> int:
    """Induced r-cycles whose vertex set is y plus a union of whole blocks."""
    if not part.blocks:
        return 0
    block_size = len(part.blocks[0])
    if block_size == 0 or (r - len(part.y)) % block_size:
        raise ValueError(
            f"cycle length {r} minus |y|={len(part.y)} is not a multiple of the block size"
        )
    s = (r - len(part.y)) // block_size
    if s < 0 or s > len(part.blocks):
        return 0
    total = 0
    for combo in combinations(part.blocks, s):
        vertices = list(part.y) + [v for b in combo for v in b]
        if _is_induced_cycle(g, vertices):
            total += 1
    return total


def verify_construction(output, pattern: Optional[Graph] = None) -> dict:
    """Recompute everything claimed by a construction and report it.

    Failures are report fields, not exceptions: count mismatches, violated
    intersection constraints and their witness pair all land in the dict.
    """
    g = output.graph
    spec = output.spec
    if pattern is None:
        pattern = cycle(spec.r)
    fam = associated_family(g, pattern, "induced")
    ok, violation = fam_mod.is_l_intersecting(fam, spec)
    report = {
        "name": output.name,
        "params": output.params,
        "order": g.n,
        "spec": spec.describe(),
        "induced_count": len(fam.edges),
        "expected_count": output.expected_count,
        "count_matches": (
            None if output.expected_count is None else len(fam.edges) == output.expected_count
        ),
        "l_intersecting": ok,
        "violation": None
        if violation is None
        else {
            "edge_a": list(violation[0]),
            "edge_b": list(violation[1]),
            "size": violation[2],
        },
    }
    if fam.edges:
        core = fam_mod.common_core(fam)
        report["common_core"] = list(core)
        link = fam_mod.link_family(g, pattern, core)
        report["link_edge_count"] = len(link.edges)
        if spec.ap_with_r and spec.d:
            atoms = atom_decomposition(link, spec.d)
            report["atoms"] = {
                "count": len(atoms.atoms),
                "d_atoms": len(atoms.d_atoms),
                "covered": len(atoms.covered_union),
                "remainder": len(atoms.remainder),
            }
    else:
        report["common_core"] = None
    if spec.ap_with_r:
        envelope = fam_mod.ap_envelope(g.n, spec)
        report["ap_envelope"] = {
            "numerator": envelope.numerator,
            "denominator": envelope.denominator,
        }
    return report
