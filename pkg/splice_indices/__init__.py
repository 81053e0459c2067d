"""Distance-based topological indices of splice graphs."""
from splice_indices.exceptions import SpliceIndicesException
from splice_indices.formulas import evaluate, formula_inputs, splice_index_report
from splice_indices.graph import Graph, all_pairs_distances, bfs_distances, build_graph
from splice_indices.indices import (Method, compute_indices, eccentric_connectivity,
                                    edge_szeged, pi, pi_edge, pi_vertex, szeged)
from splice_indices.splice import SpliceSpec, Variant
from splice_indices.verify import CampaignConfig, run_campaign, verify_one
from splice_indices.version import VERSION as __version__

__all__ = [
    "CampaignConfig",
    "Graph",
    "Method",
    "SpliceIndicesException",
    "SpliceSpec",
    "Variant",
    "__version__",
    "all_pairs_distances",
    "bfs_distances",
    "build_graph",
    "compute_indices",
    "eccentric_connectivity",
    "edge_szeged",
    "evaluate",
    "formula_inputs",
    "pi",
    "pi_edge",
    "pi_vertex",
    "run_campaign",
    "splice_index_report",
    "szeged",
    "verify_one",
]
