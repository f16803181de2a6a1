"""Plus-heavy embeddings, cycles and triangle factors in +/-1 labeled complete graphs."""

from ._signedspan import (
    InputError,
    Pattern,
    SignedGraph,
    best_hamiltonian,
    best_triangle_factor,
    bipartite_minus_matching,
    constants,
    cycle_plus_count,
    cycle_signed_sum,
    discrepancy,
    embed,
    embedding_bound,
    make_pattern,
    minus_clique,
    minus_clique_order,
    path_target,
    paths,
    planted_cliques,
    plus_subgraph,
    random_balanced,
    random_labeling,
    score,
    spectrum,
    triangle_program,
    triangles,
)

__all__ = [name for name in dir() if not name.startswith("_")]
