"""Graph dismantling, flag-complex collapse and poset weak points.

The library operates on three families of finite structures - simple graphs,
simplicial complexes and posets - and the standard maps between them, with
every reduction emitted as a replayable certificate of elementary moves.
"""

from .graphs import (
    BudgetExceededError,
    CliqueFamily,
    Graph,
    GraphError,
    IsoWitness,
    UnknownEdgeError,
    UnknownVertexError,
    are_isomorphic,
    barycentric_graph,
    canonical_form,
    complete_graph,
    complete_subgraphs,
    cycle_graph,
    edgeless_graph,
    enumerate_complete_subgraphs,
    maximal_cliques,
    path_graph,
    subset_label,
)
from .dismantling import (
    CertificateError,
    CheckReport,
    DismantlingOrder,
    GraphMove,
    IContractibility,
    MoveCertificate,
    MoveKind,
    NormalizationError,
    Outcome,
    SearchStats,
    SearchVerdict,
    apply_move,
    check_certificate,
    dismantles_onto,
    dismantling_core,
    dominated_vertices,
    is_dismantlable,
    is_i_contractible,
    is_s_dismantlable_edge,
    is_s_dismantlable_vertex,
    normalize_certificate,
    realize_edge_deletion,
    realize_s_neighborhood_deletion,
    s_collapse_search,
    s_dismantlable_edges,
    s_dismantlable_vertices,
    ws_reduction_search,
)
from .simplicial import (
    CollapsePair,
    ComplexCertificate,
    ComplexError,
    SimplicialComplex,
    barycentric_complex,
    check_complex_certificate,
    clique_complex,
    collapse_search,
    delete_open_star,
    domination_collapse,
    free_pairs,
    full_simplex,
    inclusion_graph,
    is_flag,
    link,
    one_skeleton,
    star_collapse_certificate,
)
from .posets import (
    Poset,
    PosetCertificate,
    PosetDismantlingOrder,
    PosetError,
    PosetMove,
    antichain_poset,
    barycentric_poset,
    chain_poset,
    check_poset_certificate,
    clique_poset,
    comparability_graph,
    face_poset,
    irreducible_points,
    is_dismantlable_poset,
    join,
    order_complex,
    product_with_two_chain,
    weak_point_cascade,
    weak_points,
)
from .identities import (
    PropertyReport,
    rewrite_edge_moves,
    run_property_suite,
    subdivision_certificate,
)

__version__ = "0.1.0"
