"""leafspan: spanning trees with few leaves, under edge contraction.

The library answers "does this graph have a spanning tree with exactly
(or at most) k leaves?" exactly, and implements constructive procedures
that move such trees across edge contractions: preserving the leaf count,
reducing it by one, and lifting a tree of a contracted graph back to the
original.  A verification harness sweeps every small graph and checks the
procedures' guarantees end to end.
"""

from .constructions import (
    ConditionViolated,
    HypothesisViolated,
    InternalContradiction,
    LiftWitness,
    NoValidAttachment,
    PreservationWitness,
    ReductionTrace,
    check_min_leaf_drop,
    composed_origin,
    find_preserving_edge,
    lift_tree,
    lift_tree_relaxed,
    min_leaf_drop_violation,
    reduce_leaf_count,
)
from .corpus import (
    CorpusSpec,
    NamedGraph,
    UnknownName,
    connected_masks,
    enumerate_connected,
    graph_from_mask,
    named_graph,
)
from .graph6 import (
    BadByteRange,
    Graph6Error,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBody,
    densify,
    parse_graph6,
    write_graph6,
)
from .graphs import (
    ContractionResult,
    Edge,
    EdgeNotPresent,
    Graph,
    GraphError,
    contract,
    edge_private_neighbors,
    is_connected,
    is_k1r_free,
    neighborhood_condition,
    sigma_k,
    subdivide,
)
from .spanning import (
    ConditionReport,
    LeafReport,
    NotATree,
    NotConnected,
    SpanningTree,
    TooSmall,
    check_ore_condition,
    check_sigma4_condition,
    enumerate_spanning_trees,
    has_hamiltonian_path,
    has_k_end_tree,
    has_k_ended_tree,
    leaf_report,
    min_leaf_count,
    spanning_tree_count,
)
from .suites import VerificationReport, run_suite

__all__ = [
    "BadByteRange",
    "ConditionReport",
    "ConditionViolated",
    "ContractionResult",
    "CorpusSpec",
    "Edge",
    "EdgeNotPresent",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HypothesisViolated",
    "InternalContradiction",
    "LeafReport",
    "LiftWitness",
    "MalformedHeader",
    "NamedGraph",
    "NoValidAttachment",
    "NotATree",
    "NotConnected",
    "PreservationWitness",
    "ReductionTrace",
    "SpanningTree",
    "TooSmall",
    "TrailingGarbage",
    "TruncatedBody",
    "UnknownName",
    "VerificationReport",
    "check_min_leaf_drop",
    "check_ore_condition",
    "check_sigma4_condition",
    "composed_origin",
    "connected_masks",
    "contract",
    "densify",
    "edge_private_neighbors",
    "enumerate_connected",
    "enumerate_spanning_trees",
    "find_preserving_edge",
    "graph_from_mask",
    "has_hamiltonian_path",
    "has_k_end_tree",
    "has_k_ended_tree",
    "is_connected",
    "is_k1r_free",
    "leaf_report",
    "lift_tree",
    "lift_tree_relaxed",
    "min_leaf_count",
    "min_leaf_drop_violation",
    "named_graph",
    "neighborhood_condition",
    "parse_graph6",
    "reduce_leaf_count",
    "run_suite",
    "sigma_k",
    "spanning_tree_count",
    "subdivide",
    "write_graph6",
]

__version__ = "0.1.0"
