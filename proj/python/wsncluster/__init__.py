"""Deterministic WSN clustering and network-lifetime simulator.

Thin wrapper over the compiled extension module. Geometry is passed as
(x, y) tuples, membership matrices as lists of per-cluster rows, and
simulation results come back as plain dicts.
"""

from ._wsncluster import (
    NetworkConfig,
    cluster_pipeline,
    crossover_distance,
    density_profile,
    form_clusters,
    hard_kmeans,
    membership,
    protocol_names,
    reassign_boundary,
    run_batch,
    select_initial_centers,
    simulate,
    simulate_rounds_csv,
    soft_kmeans,
)

__all__ = [
    "NetworkConfig",
    "cluster_pipeline",
    "crossover_distance",
    "density_profile",
    "form_clusters",
    "hard_kmeans",
    "membership",
    "protocol_names",
    "reassign_boundary",
    "run_batch",
    "select_initial_centers",
    "simulate",
    "simulate_rounds_csv",
    "soft_kmeans",
]

__version__ = "0.1.0"
