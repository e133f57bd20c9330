"""Controlling centrality of temporal networks and its tree-based bounds."""

from .controllability import (
    CentralityConfig,
    CentralityReport,
    assemble_wc,
    controlling_centrality,
)
from .gf import DEFAULT_PRIME, FieldAssignment, generic_rank
from .reachability import assemble_w_star, communicability_row, reachable_set
from .synth import SynthConfig, generate
from .temporal_graph import (
    ContactEvent,
    ParseError,
    TemporalNetwork,
    aggregated_degree,
    from_contacts,
    parse_contact_list,
    to_contact_list,
)
from .tog import bfs_spanning_tree, build_tog
from .trees import bounds_total, classify, extract_trees, node_bounds

__all__ = [
    "CentralityConfig",
    "CentralityReport",
    "ContactEvent",
    "DEFAULT_PRIME",
    "FieldAssignment",
    "ParseError",
    "SynthConfig",
    "TemporalNetwork",
    "aggregated_degree",
    "assemble_w_star",
    "assemble_wc",
    "bfs_spanning_tree",
    "bounds_total",
    "build_tog",
    "classify",
    "communicability_row",
    "controlling_centrality",
    "extract_trees",
    "from_contacts",
    "generate",
    "generic_rank",
    "node_bounds",
    "parse_contact_list",
    "reachable_set",
    "to_contact_list",
]
