"""Uniform set families with intersection-size constraints.

Covers membership checking, families of pattern copies in a graph, link
families over a pinned vertex set, atom decompositions, sunflowers, the
product upper bound, and attachment profiles of a candidate atom.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import copies
from .cliques import max_clique
from .errors import FormatError
from .graphs import Graph, bits, mask_of


@dataclass(frozen=True)
class IntersectionSpec:
    """Uniformity r plus the allowed pairwise intersection sizes L.

    L is normalized to a strictly increasing tuple.  When the L values and r
    form an arithmetic progression the common difference d is exposed; that
    is the regime in which standard-cycle counting applies.
    """

    r: int
    L: tuple[int, ...]

    def __init__(self, r: int, L: Iterable[int]):
        values = tuple(sorted(set(int(x) for x in L)))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "L", values)
        if self.r < 3:
            raise ValueError("uniformity r must be at least 3")
        if not values:
            raise ValueError("L must be nonempty")
        if values[0] < 0 or values[-1] >= self.r:
            raise ValueError(f"L must lie inside [0, {self.r - 1}]")

    @property
    def s(self) -> int:
        return len(self.L)

    @property
    def ap_with_r(self) -> bool:
        gaps = [b - a for a, b in zip(self.L, self.L[1:] + (self.r,))]
        return len(set(gaps)) == 1

    @property
    def d(self) -> Optional[int]:
        return self.r - self.L[-1] if self.ap_with_r else None

    def describe(self) -> dict:
        return {
            "r": self.r,
            "L": list(self.L),
            "s": self.s,
            "ap_with_r": self.ap_with_r,
            "d": self.d,
        }


@dataclass(frozen=True)
class SetFamily:
    """Distinct r-subsets of 0..ground_size-1, kept in a stable order.

    ``labels`` records original vertex names when the ground set was
    re-indexed (see link_family); it does not affect equality of edges.
    """

    ground_size: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise ValueError(f"edge {e} is not an r-set with r={self.r}")
            if any(not 0 <= v < self.ground_size for v in e):
                raise ValueError(f"edge {e} outside ground set 0..{self.ground_size - 1}")
            if tuple(sorted(e)) in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(tuple(sorted(e)))
        if self.labels is not None and len(self.labels) != self.ground_size:
            raise ValueError("labels length must equal ground size")

    @classmethod
    def from_sets(cls, ground_size: int, sets: Iterable[Iterable[int]], labels=None):
        edges = tuple(tuple(sorted(s)) for s in sets)
        r = len(edges[0]) if edges else 0
        return cls(ground_size, r, edges, labels)

    def __len__(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> list[int]:
        return [mask_of(e) for e in self.edges]

    def relabelled_edges(self) -> list[tuple[int, ...]]:
        if self.labels is None:
            return [tuple(e) for e in self.edges]
        return [tuple(sorted(self.labels[v] for v in e)) for e in self.edges]


def is_l_intersecting(
    fam: SetFamily, spec: IntersectionSpec
) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...], int]]]:
    """Check all pairwise intersection sizes; on failure return the first
    violating pair (in edge order) and its intersection size."""
    if fam.r and fam.r != spec.r:
        raise ValueError(f"family uniformity {fam.r} does not match spec r {spec.r}")
    allowed = set(spec.L)
    masks = fam.edge_masks()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            size = (masks[i] & masks[j]).bit_count()
            if size not in allowed:
                return False, (fam.edges[i], fam.edges[j], size)
    return True, None


def common_core(fam: SetFamily) -> tuple[int, ...]:
    if not fam.edges:
        raise ValueError("common core of an empty family is undefined")
    core = mask_of(fam.edges[0])
    for e in fam.edges[1:]:
        core &= mask_of(e)
    return tuple(bits(core))


def associated_family(g: Graph, pattern: Graph, mode: str = "induced") -> SetFamily:
    """The r-subsets of V(g) whose induced graph is (induced mode) or
    contains (span mode) a copy of the pattern."""
    if pattern.n > g.n:
        raise ValueError("pattern order exceeds host order")
    if mode == "induced":
        sets = copies.enumerate_induced_copies(g, pattern)
    elif mode == "span":
        sets = copies.span_copy_sets(g, pattern)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return SetFamily(g.n, pattern.n, tuple(sets))


def link_family(g: Graph, pattern: Graph, w: Iterable[int]) -> SetFamily:
    """Sets S over V(g) minus w with g[S + w] inducing the pattern.

    The ground set is re-indexed densely; ``labels`` maps back to original
    vertex ids.
    """
    w_set = set(w)
    if len(w_set) > pattern.n:
        raise ValueError("pinned set larger than the pattern")
    ground = [v for v in range(g.n) if v not in w_set]
    index = {v: i for i, v in enumerate(ground)}
    w_mask = mask_of(w_set)
    sets = []
    for copy in copies.enumerate_induced_copies(g, pattern):
        m = mask_of(copy)
        if m & w_mask == w_mask:
            sets.append(tuple(index[v] for v in copy if v not in w_set))
    return SetFamily(
        len(ground), pattern.n - len(w_set), tuple(sorted(sets)), tuple(ground)
    )


@dataclass(frozen=True)
class AtomDecomposition:
    """Membership-fingerprint classes of the covered vertices.

    ``atoms`` are the classes; ``d_atoms`` the classes of size exactly d;
    ``covered_union`` their union; ``remainder`` every other ground vertex
    (vertices in no edge land here, never in an atom).
    """

    atoms: tuple[tuple[int, ...], ...]
    d_atoms: tuple[tuple[int, ...], ...]
    covered_union: tuple[int, ...]
    remainder: tuple[int, ...]


def atom_decomposition(fam: SetFamily, d: int) -> AtomDecomposition:
    """Group ground vertices by the exact set of edges containing them."""
    if d < 1:
        raise ValueError("atom size d must be positive")
    fingerprints: dict[int, int] = {}
    for idx, e in enumerate(fam.edges):
        for v in e:
            fingerprints[v] = fingerprints.get(v, 0) | (1 << idx)
    classes: dict[int, list[int]] = {}
    for v, fp in fingerprints.items():
        classes.setdefault(fp, []).append(v)
    atoms = tuple(sorted(tuple(sorted(c)) for c in classes.values()))
    d_atoms = tuple(a for a in atoms if len(a) == d)
    covered_union = tuple(sorted(v for a in d_atoms for v in a))
    in_union = set(covered_union)
    remainder = tuple(v for v in range(fam.ground_size) if v not in in_union)
    return AtomDecomposition(atoms, d_atoms, covered_union, remainder)


def max_sunflower_with_core(
    fam: SetFamily, core: Iterable[int], budget: Optional[int] = None
) -> SetFamily:
    """Largest sub-family whose pairwise intersections all equal ``core``.

    Exact, via maximum clique on the pairwise-compatibility graph of the
    edges containing the core.
    """
    core_set = tuple(sorted(set(core)))
    if len(core_set) >= fam.r and fam.r > 0:
        raise ValueError("core must be smaller than the uniformity")
    core_mask = mask_of(core_set)
    members = [
        (i, mask_of(e))
        for i, e in enumerate(fam.edges)
        if mask_of(e) & core_mask == core_mask
    ]
    if not members:
        return SetFamily(fam.ground_size, fam.r, (), fam.labels)
    neighbors = [0] * len(members)
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if members[a][1] & members[b][1] == core_mask:
                neighbors[a] |= 1 << b
                neighbors[b] |= 1 << a
    size, picked, _ = max_clique(neighbors, budget=budget)
    chosen = tuple(fam.edges[members[i][0]] for i in picked)
    return SetFamily(fam.ground_size, fam.r, chosen, fam.labels)


def product_bound(n: int, spec: IntersectionSpec) -> Fraction:
    """Upper bound on the size of an n-vertex family: prod (n-l)/(r-l) over L."""
    if n < spec.r:
        raise ValueError("ground size below the uniformity")
    out = Fraction(1)
    for ell in spec.L:
        out *= Fraction(n - ell, spec.r - ell)
    return out


def ap_envelope(n: int, spec: IntersectionSpec) -> Fraction:
    """Reference value ((n-l1)/(r-l1))^s for progression-compatible specs.

    Reporting aid only; it is an asymptotic envelope, never a hard bound.
    """
    if not spec.ap_with_r:
        raise ValueError("L values and r do not form an arithmetic progression")
    ell1 = spec.L[0]
    return Fraction(n - ell1, spec.r - ell1) ** spec.s


@dataclass(frozen=True)
class AttachmentProfile:
    """How a candidate atom S attaches to a pinned set W.

    ``alpha`` maps each w to its neighbor count inside S.  When every alpha
    is 1 and every S vertex touches exactly two W vertices, contracting each
    S vertex yields a perfect matching on W; ``matching`` then lists
    (w1, w2, contracted vertex) triples.
    """

    alpha: dict[int, int]
    matching: Optional[tuple[tuple[int, int, int], ...]]


def attachment_profile(g: Graph, s: Iterable[int], w: Iterable[int]) -> AttachmentProfile:
    s_list = tuple(sorted(set(s)))
    w_list = tuple(sorted(set(w)))
    if set(s_list) & set(w_list):
        raise ValueError("atom and pinned set must be disjoint")
    s_mask = mask_of(s_list)
    alpha = {wv: (g.adj[wv] & s_mask).bit_count() for wv in w_list}
    matching = None
    if w_list and all(a == 1 for a in alpha.values()):
        pairs = []
        ok = True
        for x in s_list:
            touched = [wv for wv in w_list if g.has_edge(x, wv)]
            if len(touched) != 2:
                ok = False
                break
            pairs.append((touched[0], touched[1], x))
        if ok and 2 * len(s_list) == len(w_list):
            matching = tuple(sorted(pairs))
    return AttachmentProfile(alpha, matching)


def family_to_text(fam: SetFamily) -> str:
    lines = [f"{fam.ground_size} {fam.r} {len(fam.edges)}"]
    lines += [" ".join(str(v) for v in e) for e in fam.edges]
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> SetFamily:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 3:
        raise FormatError("family file must start with 'groundSize r m'")
    try:
        ground, r, m = (int(x) for x in rows[0])
        sets = [tuple(int(v) for v in row) for row in rows[1:]]
    except (ValueError, TypeError) as exc:
        raise FormatError(f"malformed family file: {exc}") from exc
    if len(sets) != m:
        raise FormatError(f"header declares {m} edges, found {len(sets)}")
    try:
        return SetFamily(ground, r, tuple(tuple(sorted(s)) for s in sets))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def family_to_json(fam: SetFamily) -> dict:
    out = {
        "ground_size": fam.ground_size,
        "r": fam.r,
        "edges": [list(e) for e in fam.edges],
    }
    if fam.labels is not None:
        out["labels"] = list(fam.labels)
    return out


def family_from_json(data: dict) -> SetFamily:
    labels = tuple(data["labels"]) if "labels" in data else None
    return SetFamily(
        int(data["ground_size"]),
        int(data["r"]),
        tuple(tuple(sorted(e)) for e in data["edges"]),
        labels,
    )
