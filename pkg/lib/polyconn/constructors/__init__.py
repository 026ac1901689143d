"""Graphs, matroids and seeded random instances."""

from .graph import (
    Edge,
    Graph,
    cycle_matroid,
    graph_connectivity,
    graph_rank,
)
from .matroids import (
    Member,
    SubsetFamily,
    free_matroid,
    matroid_check,
    matroid_connectivity,
    polymatroid_from_subsets,
    uniform_matroid,
)
from .random import (
    instance_seed,
    random_connected_leafless_graph,
    random_connectivity,
    random_coverage_polymatroid,
    random_graph,
    random_k_polymatroid,
    random_matroid,
    random_polymatroid,
    random_set_function,
    random_weighted_coverage_polymatroid,
)

__all__ = [
    "Edge",
    "Graph",
    "Member",
    "SubsetFamily",
    "cycle_matroid",
    "free_matroid",
    "graph_connectivity",
    "graph_rank",
    "instance_seed",
    "matroid_check",
    "matroid_connectivity",
    "polymatroid_from_subsets",
    "random_connected_leafless_graph",
    "random_connectivity",
    "random_coverage_polymatroid",
    "random_graph",
    "random_k_polymatroid",
    "random_matroid",
    "random_polymatroid",
    "random_set_function",
    "random_weighted_coverage_polymatroid",
    "uniform_matroid",
]
