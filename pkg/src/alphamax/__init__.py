"""Desk-scale toolkit for density-maximal subgraph extraction, rainbow
cycle and subdivision search, higher-order (face) paths and cycles in
uniform hypergraphs, explicit extremal constructions, and Monte Carlo
estimates of the sampling bounds that drive the searches."""

from .graphs import (
    ColoredGraph,
    ForbiddenMap,
    InputError,
    SimpleGraph,
    check_proper_coloring,
    graph_digest,
    graph_from_document,
    graph_to_document,
    load_edge_list,
    round_robin_coloring,
    save_edge_list,
)
from .density import (
    DensityScore,
    ExpansionReport,
    MaximalityVerdict,
    alpha_max_subgraph_exact,
    alpha_max_subgraph_peel,
    check_expansion_bounds,
    verify_alpha_maximal,
)
from .hypergraphs import (
    DegreeCheckReport,
    HypmaxVerdict,
    RGraph,
    ShadowReport,
    alpha_max_rgraph,
    conditional_neighborhood,
    face_neighborhood,
    load_hyperedge_list,
    mindeg_subhypergraph,
    rgraph_digest,
    rgraph_from_document,
    rgraph_to_document,
    save_hyperedge_list,
    shadow_bound_check,
    verify_hypmax,
    vertex_face_degree_check,
)
from .simplicial import (
    CycleSearchResult,
    FaceCycleCert,
    FacePathCert,
    FaceReach,
    FaceWalk,
    FanResult,
    PathSearchResult,
    classify_surface,
    classify_walk,
    canonical_cycle_faces,
    euler_characteristic,
    fan_paths,
    find_face_cycle,
    is_three_partite,
    path_between_face_set,
    sampled_reach_faces,
    split_cycle,
    tight_path_greedy,
    vertex_order,
    walk_in_host,
)
from .rainbow import (
    RainbowCycleResult,
    ReachSet,
    SampleConfig,
    SubdivisionCert,
    exact_length_reach,
    extract_cycle_from_circuit,
    find_large_subdivision,
    find_one_subdivision,
    find_rainbow_cycle,
    find_rainbow_cycle_exact,
    find_rainbow_subdivision,
    per_round_rate,
    sprinkle,
    subdivision_from_document,
    subdivision_to_document,
    uq_reach,
    validate_rainbow_cycle,
    validate_subdivision,
)
from .constructions import (
    GirthResult,
    ThreeGraphResult,
    embed_cycle_in_hypercube,
    hypercube_colored,
    random_high_girth_graph,
    random_short_cycle_free_3graph,
    validate_hypercube_embedding,
)
from .montecarlo import (
    BipartiteInstance,
    ColoredBipartiteInstance,
    InequalityResult,
    TrialReport,
    chernoff_bounds,
    estimate_chernoff_lower,
    estimate_colored_sampling,
    estimate_master,
    estimate_neighborhood_sampling,
    estimate_reach,
    numeric_inequality_suite,
    reports_to_csv,
    reports_to_document,
)
from .cli import RunConfig, main, run

__version__ = "0.1.0"
