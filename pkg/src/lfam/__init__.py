"""Toolkit for counting and certifying intersection-constrained families of
induced subgraph copies, extremal constructions, and flawless
1-factorization searches."""

__version__ = "0.1.0"

from .canon import CanonicalForm, are_isomorphic, canonical_form
from .constructions import (
    ConstructionOutput,
    clique_join_turan,
    cycle_blowup,
    cycle_blowup_13,
    cycle_blowup_22,
    flawless_expansion,
    flawless_triple,
    path_blowup,
    path_blowup_clique_s2,
    staircase,
    turan,
)
from .copies import (
    CycleWitness,
    count_copies,
    enumerate_hamiltonian_cycles,
    enumerate_induced_copies,
)
from .errors import BudgetExceededError, FormatError, GraphSizeError, LfamError
from .factorization import (
    FlawlessVerdict,
    OneFactorization,
    check_flawless,
    enumerate_one_factorizations,
    f_of_n,
    has_flawless_1f,
    is_perfect_pair,
)
from .family import (
    AtomDecomposition,
    AttachmentProfile,
    IntersectionSpec,
    SetFamily,
    ap_envelope,
    associated_family,
    atom_decomposition,
    attachment_profile,
    common_core,
    is_l_intersecting,
    link_family,
    max_sunflower_with_core,
    product_bound,
)
from .genum import enumerate_graphs
from .graphio import from_graph6, parse_pattern, to_graph6
from .graphs import Graph
from .search import (
    BlockPartition,
    SearchOutcome,
    count_block_cycles,
    max_intersecting_family,
    max_pattern_count,
    verify_construction,
)
