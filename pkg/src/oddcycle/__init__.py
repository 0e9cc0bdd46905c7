"""Structural recognition, kernel-perfect line-graph orientations, list edge
coloring, and online coloring games for the class of graphs whose odd cycles
pairwise share at most one edge."""

from .graphs import (
    Graph,
    BlockDecomposition,
    LineGraphMap,
    parse_graph,
    serialize_graph,
    blocks,
    bipartition,
    line_graph,
    odd_cycles,
)
from .recognize import (
    ThetaSignature,
    BlockReport,
    GraphClassification,
    recognize_theta,
    classify_block,
    classify_graph,
    odd_overlap_witness,
    verify_witness_pair,
)
from .orient import (
    LineDigraph,
    DemandFunction,
    CertLeaf,
    CertSplit,
    konig_edge_color,
    orient_bipartite,
    orient_k4,
    orient_crown,
    orient_crown_bridge,
    orient_crown_tip,
    orient_theta,
    orient_strong,
    compose_blocks,
    orient_graph,
)
from .color import (
    find_kernel,
    bbs_color,
    tuple_color,
    diamond_color,
    choose_edges,
    validate_edge_coloring,
)
from .paint import (
    GameState,
    GameResult,
    painter_move,
    kernel_painter,
    play_game,
    kernel_painter_always_wins,
    exhaustive_paintability,
    replay_strategy,
)
from .verify import (
    KernelPerfectReport,
    check_kernel_perfect,
    every_clique_has_sink,
    check_source_exists_in_clique,
    check_choosable,
    search_orientation,
    triple_diamond_graph,
    verify_triple_diamond_sharpness,
)

__all__ = [
    "Graph",
    "BlockDecomposition",
    "LineGraphMap",
    "parse_graph",
    "serialize_graph",
    "blocks",
    "bipartition",
    "line_graph",
    "odd_cycles",
    "ThetaSignature",
    "BlockReport",
    "GraphClassification",
    "recognize_theta",
    "classify_block",
    "classify_graph",
    "odd_overlap_witness",
    "verify_witness_pair",
    "LineDigraph",
    "DemandFunction",
    "CertLeaf",
    "CertSplit",
    "konig_edge_color",
    "orient_bipartite",
    "orient_k4",
    "orient_crown",
    "orient_crown_bridge",
    "orient_crown_tip",
    "orient_theta",
    "orient_strong",
    "compose_blocks",
    "orient_graph",
    "find_kernel",
    "bbs_color",
    "tuple_color",
    "diamond_color",
    "choose_edges",
    "validate_edge_coloring",
    "GameState",
    "GameResult",
    "painter_move",
    "kernel_painter",
    "play_game",
    "kernel_painter_always_wins",
    "exhaustive_paintability",
    "replay_strategy",
    "KernelPerfectReport",
    "check_kernel_perfect",
    "every_clique_has_sink",
    "check_source_exists_in_clique",
    "check_choosable",
    "search_orientation",
    "triple_diamond_graph",
    "verify_triple_diamond_sharpness",
]

__version__ = "0.1.0"
