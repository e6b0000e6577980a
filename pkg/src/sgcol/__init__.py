"""Signed graphs, exact-distance graphs, generalised colouring numbers,
and the constructive colourings built on them.

The heavy per-vertex kernels run through a compiled extension when it
is available and fall back to pure Python otherwise; `BACKEND` names
the active implementation.
"""

from ._kernels import BACKEND
from .colorers import (Assignment733, ChromaticBoundsOnly, ChromaticResult,
                       Colouring, NotTwoTreeError, RelabellingError,
                       TargetGraphP133, VectorColour, build_target_p133,
                       chromatic_number, chromatic_number_exact,
                       colour_2tree_7, colour_exact_distance_via_dcol,
                       colour_exact_distance_via_wcolk,
                       colour_strong_square_via_col2, first_coordinate_colouring,
                       hom_to_p133)
from .families import (FAMILIES, FamilySpec, gen_apollonian, gen_clique_indep,
                       gen_k7_gadget, gen_random_signed, gen_signed_2tree,
                       gen_snk, gen_star_gadget, generate, snk_ordering)
from .orderings import (KINDS, ReachProfile, VertexOrdering, degeneracy_ordering,
                        dreach_sets, minimize_over_orderings, profile,
                        reach_sets, treewidth_small, wreach_sets)
from .planar import (AuditReport, PathMeta, Reduction, ReductionError,
                     Triangulation, TriangulationError, audit_dr4,
                     build_reduction, load_triangulation, reduction_ordering,
                     verify_reduction)
from .sgraph import (EXACT_DISTANCE_VARIANTS, NEGATIVE, POSITIVE, Graph,
                     SignedGraph, bfs_distances, exact_distance_graph,
                     graph_union, shortest_path_sign_counts,
                     unsigned_exact_distance_graph)
from .verify import SUITES, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "__version__",
    "Graph", "SignedGraph", "POSITIVE", "NEGATIVE", "EXACT_DISTANCE_VARIANTS",
    "bfs_distances", "shortest_path_sign_counts", "exact_distance_graph",
    "unsigned_exact_distance_graph", "graph_union",
    "KINDS", "VertexOrdering", "ReachProfile", "wreach_sets", "reach_sets",
    "dreach_sets", "profile", "degeneracy_ordering", "minimize_over_orderings",
    "treewidth_small",
    "Colouring", "VectorColour", "Assignment733", "TargetGraphP133",
    "ChromaticResult", "ChromaticBoundsOnly", "NotTwoTreeError",
    "RelabellingError", "colour_2tree_7", "build_target_p133",
    "first_coordinate_colouring", "hom_to_p133",
    "colour_exact_distance_via_dcol", "colour_exact_distance_via_wcolk",
    "colour_strong_square_via_col2", "chromatic_number",
    "chromatic_number_exact",
    "Triangulation", "TriangulationError", "load_triangulation",
    "Reduction", "ReductionError", "PathMeta", "build_reduction",
    "reduction_ordering", "verify_reduction", "audit_dr4", "AuditReport",
    "FAMILIES", "FamilySpec", "generate", "gen_snk", "snk_ordering",
    "gen_star_gadget", "gen_k7_gadget", "gen_clique_indep", "gen_signed_2tree",
    "gen_apollonian", "gen_random_signed",
    "SUITES", "SuiteResult", "run_suite",
]
