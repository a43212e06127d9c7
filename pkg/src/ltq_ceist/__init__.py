"""Edge-disjoint spanning trees of locally twisted cubes."""

from .ceist import CeistSet, SpanningTree, base_case, construct, even_step, odd_step, translate_tree
from .simulate import BroadcastConfig, LatencyReport, compute_latency, pair_distances, round_robin_assign, tree_diameter
from .topology import (
    LtqTopology,
    Parity,
    build_ltq_direct,
    build_ltq_recursive,
    dimension_neighbor,
    edge,
    edge_parity,
    is_adjacent,
    lemma1_holds,
    subcube_of,
)
from .verify import (
    StructureError,
    VerificationReport,
    is_spanning_tree,
    leftover_edges,
    max_tree_bound,
    pairwise_disjoint,
    verify_ceists,
)

__version__ = "0.1.0"
