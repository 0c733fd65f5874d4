"""Exact spanning-tree counts and uprooted-tree censuses for labeled graphs.

The package pairs the matrix tree theorem (and a marked-edge variant that
counts trees through one chosen edge) with closed-form censuses of uprooted
spanning trees, a brute-force enumeration oracle, Prüfer codes, and
exact-rational identity checks.  All arithmetic is exact.
"""

from .census import (
    FAMILY_KMN,
    FAMILY_KN,
    FAMILY_KN_MINUS_EDGE,
    FormulaDomainError,
    base_graph,
    census_cells,
    census_formula,
    census_mtt,
    census_oracle,
    count_kmn_child,
    count_kn_minus_edge_root,
    count_kn_root,
    count_kn_root_child,
)
from .graphs import (
    Graph,
    MissingEdgeError,
    census_graph_kmn,
    census_graph_kn,
    census_graph_kn_minus_edge,
    census_graph_kn_refined,
    complete_bipartite,
    complete_graph,
    delete_edges,
    graph_from_edges,
    graph_from_json,
    graph_to_json,
    laplacian,
    normalize_edge,
    reduced_laplacian,
    relabel,
    trim_neighbors_above,
)
from .identities import (
    IdentityReport,
    verify_all,
    verify_general_a,
    verify_general_a_minus_edge,
    verify_identity1,
    verify_identity2,
    verify_kn_minus_edge_norm,
    verify_kn_minus_edge_total,
    verify_refinement,
    verify_simplified_1,
    verify_simplified_2,
    verify_sumrefine,
)
from .intdet import LinPoly, MarkedMatrix, NonlinearMarkError, det_bareiss, det_linear_in_x
from .kirchhoff import (
    count_spanning_trees,
    count_spanning_trees_with_edge,
    count_uprooted_all_roots,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudgetError,
    RootedTree,
    Tree,
    enumerate_spanning_trees,
    highest_child_of_root,
    is_uprooted,
    prufer_decode,
    prufer_encode,
    root_tree,
    tree_to_json,
)
from .tables import GRAIN_ROOT, GRAIN_ROOT_CHILD, CensusTable

__version__ = "0.1.0"

__all__ = [
    "CensusTable",
    "DEFAULT_BUDGET",
    "FAMILY_KMN",
    "FAMILY_KN",
    "FAMILY_KN_MINUS_EDGE",
    "FormulaDomainError",
    "GRAIN_ROOT",
    "GRAIN_ROOT_CHILD",
    "Graph",
    "IdentityReport",
    "LinPoly",
    "MarkedMatrix",
    "MissingEdgeError",
    "NonlinearMarkError",
    "OracleBudgetError",
    "RootedTree",
    "Tree",
    "base_graph",
    "census_cells",
    "census_formula",
    "census_graph_kmn",
    "census_graph_kn",
    "census_graph_kn_minus_edge",
    "census_graph_kn_refined",
    "census_mtt",
    "census_oracle",
    "complete_bipartite",
    "complete_graph",
    "count_kmn_child",
    "count_kn_minus_edge_root",
    "count_kn_root",
    "count_kn_root_child",
    "count_spanning_trees",
    "count_spanning_trees_with_edge",
    "count_uprooted_all_roots",
    "delete_edges",
    "det_bareiss",
    "det_linear_in_x",
    "enumerate_spanning_trees",
    "graph_from_edges",
    "graph_from_json",
    "graph_to_json",
    "highest_child_of_root",
    "is_uprooted",
    "laplacian",
    "normalize_edge",
    "prufer_decode",
    "prufer_encode",
    "reduced_laplacian",
    "relabel",
    "root_tree",
    "tree_to_json",
    "trim_neighbors_above",
    "verify_all",
    "verify_general_a",
    "verify_general_a_minus_edge",
    "verify_identity1",
    "verify_identity2",
    "verify_kn_minus_edge_norm",
    "verify_kn_minus_edge_total",
    "verify_refinement",
    "verify_simplified_1",
    "verify_simplified_2",
    "verify_sumrefine",
]
