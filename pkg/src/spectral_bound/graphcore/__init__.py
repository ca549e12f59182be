"""Exact finite-graph machinery."""

from .graph import (
    Graph,
    Graph6Error,
    bipartite_double,
    cartesian_product,
    circulant,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    from_adjlist,

    from_graph6,
    kneser,
    lcf,
    line_graph,
    path,
    star,
    to_adjlist,
    to_graph6,
)
from .spectra import (
    Spectrum,
    char_poly,
    count_eigs_greater,
    eigvals_float,
    is_connected,
    min_eig,
    second_eig,
    second_eig_at_most,
    spectral_radius,
    spectrum,
)
from .structure import (
    QuotientMatrix,
    ThreePartStats,
    bfs_distances,
    components,
    distance_partition,
    drg_t,
    girth,
    is_drg_with_array,
    quotient,
    shortest_cycle,
    subgraph_order_bound,
    three_part_lambda2,
    three_part_stats,
)
