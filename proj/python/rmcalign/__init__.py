"""Forman-Ricci curvature signatures for graph alignment."""

from ._core import (
    Assignment,
    ExperimentConfig,
    Graph,
    GraphError,
    RoundResult,
    Rng,
    SignatureMode,
    Tiling,
    __version__,
    align,
    build_torus,
    cost_matrix,
    count_curvature_laplacian_violations,
    curvature_distribution,
    curvature_laplacian_residual,
    degree_matrix,
    delete_edges_randomly,
    edge_curvature,
    edge_pair_count,
    forman_curvature,
    hungarian,
    laplacian,
    line_graph,
    load_graph,
    node_curvature,
    preferential_attachment_graph,
    random_connected_graph,
    random_walk_sample,
    ricci_matrix,
    run_alignment_experiment,
    run_ppi_experiment,
    run_torus_experiment,
    score_alignment,
    write_graphml,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
