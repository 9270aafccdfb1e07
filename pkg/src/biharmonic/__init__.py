"""Biharmonic distances, spectral indices, and cross-validated checks for graphs.

The biharmonic distance between two vertices is the quadratic form of the
squared Laplacian pseudoinverse at their indicator difference. This package
computes it by four independent routes (spectral sum, pseudoinverse entries,
determinant ratio, minimum-norm solve), provides the biharmonic and Kirchhoff
indices with their sharp lower bounds, closed forms for special families, and
a verification suite plus CLI that cross-checks everything against everything.
"""

from .closed_forms import (
    CharacterTable,
    cartesian_distance,
    cayley_distance,
    character_table,
    complement_distance,
    complete_graph_distance,
    hypercube_distance,
)
from .graphs import (
    CayleySpec,
    DisconnectedGraphError,
    EdgeListFormatError,
    Graph,
    cartesian_product,
    cayley_graph,
    complement,
    complete_graph,
    cycle_graph,
    format_edge_list,
    generate,
    hypercube_graph,
    is_complete,
    is_connected,
    k4_minus,
    make_graph,
    parse_edge_list,
    path_graph,
    read_edge_list,
    wheel_graph,
    write_edge_list,
)
from .linalg import (
    EigenDecomposition,
    eigendecompose,
    jacobi_eigh,
    principal_minor_det,
    spd_solve,
    symmetrize,
)
from .metrics import (
    BoundsReport,
    BrkReport,
    IndexFloorReport,
    MethodReport,
    SpectralCache,
    all_methods,
    biharmonic_determinant,
    biharmonic_index_pairwise,
    biharmonic_index_spectral,
    biharmonic_minnorm,
    biharmonic_pinv_entries,
    biharmonic_spectral,
    bounds_report,
    build_cache,
    check_brk,
    check_edge_monotonicity,
    check_index_floor,
    distance_matrix,
    kirchhoff_index,
    resistance_distance,
    spanning_tree_count,
)
from .verification import (
    CheckResult,
    all_passed,
    count_spanning_trees_exhaustive,
    verify_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BrkReport",
    "CayleySpec",
    "CharacterTable",
    "CheckResult",
    "DisconnectedGraphError",
    "EdgeListFormatError",
    "EigenDecomposition",
    "Graph",
    "IndexFloorReport",
    "MethodReport",
    "SpectralCache",
    "all_methods",
    "all_passed",
    "biharmonic_determinant",
    "biharmonic_index_pairwise",
    "biharmonic_index_spectral",
    "biharmonic_minnorm",
    "biharmonic_pinv_entries",
    "biharmonic_spectral",
    "bounds_report",
    "build_cache",
    "cartesian_distance",
    "cartesian_product",
    "cayley_distance",
    "cayley_graph",
    "character_table",
    "check_brk",
    "check_edge_monotonicity",
    "check_index_floor",
    "complement",
    "complement_distance",
    "complete_graph",
    "complete_graph_distance",
    "count_spanning_trees_exhaustive",
    "cycle_graph",
    "distance_matrix",
    "eigendecompose",
    "format_edge_list",
    "generate",
    "hypercube_distance",
    "hypercube_graph",
    "is_complete",
    "is_connected",
    "jacobi_eigh",
    "k4_minus",
    "kirchhoff_index",
    "make_graph",
    "parse_edge_list",
    "path_graph",
    "principal_minor_det",
    "read_edge_list",
    "resistance_distance",
    "spanning_tree_count",
    "spd_solve",
    "symmetrize",
    "verify_graph",
    "wheel_graph",
    "write_edge_list",
]
