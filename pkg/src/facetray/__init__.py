"""facetray: cut-polytope facets as certificates for extremal rays of
graph-patterned PSD cones, in exact rational arithmetic."""

from .errors import CertificationError, ParseError, PreconditionError
from .graphs import (Graph, CycleSubgraph, chordless_cycles, complement,
                     complete_bipartite, complete_graph, cutset,
                     cycle_cut_preimage, cycle_graph, graph_from_json,
                     graph_to_json, has_minor, is_chordless_cycle,
                     is_series_parallel, path_graph)
from .linalg import (RankFactorization, SymMat, gram, is_psd, rank,
                     rank_factorize, rat_from_str, rat_to_str, symmat,
                     symmat_from_json, symmat_to_json)
from .cutpoly import (CutVector, LinIneq, all_cut_vectors, cut_from_json,
                      cut_to_json, cycle_inequality, edge_inequalities,
                      facet_schedule, facets_k5_free, h_polytope_vertices,
                      hypermetric_inequality, ineq_from_json, ineq_to_json,
                      is_facet, is_valid, pm_to_01, switch, zero_one_to_pm)
from .extremal import (ExtremalCertificate, GramRep, SeriesParallelRanks,
                       certificate_to_json, certify_frip_k5free, delta_gram,
                       delta_matrix, delta_max_gram, edge_matrix, embed,
                       extremal_rank_set_series_parallel, frame_space_rank,
                       is_extremal, polar_point, respects_pattern,
                       sparsity_order_bounds)

__version__ = "0.1.0"

__all__ = [
    "CertificationError", "ParseError", "PreconditionError",
    "Graph", "CycleSubgraph", "chordless_cycles", "complement",
    "complete_bipartite", "complete_graph", "cutset", "cycle_cut_preimage",
    "cycle_graph", "graph_from_json", "graph_to_json", "has_minor",
    "is_chordless_cycle", "is_series_parallel", "path_graph",
    "RankFactorization", "SymMat", "gram", "is_psd", "rank",
    "rank_factorize", "rat_from_str", "rat_to_str", "symmat",
    "symmat_from_json", "symmat_to_json",
    "CutVector", "LinIneq", "all_cut_vectors", "cut_from_json",
    "cut_to_json", "cycle_inequality", "edge_inequalities",
    "facet_schedule", "facets_k5_free", "h_polytope_vertices",
    "hypermetric_inequality", "ineq_from_json", "ineq_to_json", "is_facet",
    "is_valid", "pm_to_01", "switch", "zero_one_to_pm",
    "ExtremalCertificate", "GramRep", "SeriesParallelRanks",
    "certificate_to_json", "certify_frip_k5free", "delta_gram",
    "delta_matrix", "delta_max_gram", "edge_matrix", "embed",
    "extremal_rank_set_series_parallel", "frame_space_rank", "is_extremal",
    "polar_point", "respects_pattern", "sparsity_order_bounds",
]
