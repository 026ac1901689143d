"""polyconn: exact connectivity functions and polymatroids on small ground sets."""

from .constructors import (
    Graph,
    SubsetFamily,
    cycle_matroid,
    free_matroid,
    graph_connectivity,
    graph_rank,
    matroid_check,
    polymatroid_from_subsets,
    uniform_matroid,
)
from .core import (
    CheckReport,
    Classification,
    GroundSet,
    SetFunction,
    Witness,
    classify,
    equal,
    evaluate,
    make_set_function,
    norm,
)
from .exceptions import (
    ConstructionError,
    DependencyNotInstalledError,
    DomainError,
    ParseError,
    PolyconnError,
    PreconditionError,
)
from .formats import parse, parse_graph, serialize, serialize_graph
from .ops import (
    canonical_self_dual,
    compact_elements,
    compactify,
    connectivity_of,
    contract,
    delete,
    dual,
    induced_polymatroid,
    k_dual,
    pointwise_sum,
    run_lemmas,
    scale,
)

__all__ = [
    "CheckReport",
    "Classification",
    "ConstructionError",
    "DependencyNotInstalledError",
    "DomainError",
    "Graph",
    "GroundSet",
    "ParseError",
    "PolyconnError",
    "PreconditionError",
    "SetFunction",
    "SubsetFamily",
    "Witness",
    "canonical_self_dual",
    "classify",
    "compact_elements",
    "compactify",
    "connectivity_of",
    "contract",
    "cycle_matroid",
    "delete",
    "dual",
    "equal",
    "evaluate",
    "free_matroid",
    "graph_connectivity",
    "graph_rank",
    "induced_polymatroid",
    "k_dual",
    "make_set_function",
    "matroid_check",
    "norm",
    "parse",
    "parse_graph",
    "pointwise_sum",
    "polymatroid_from_subsets",
    "run_lemmas",
    "scale",
    "serialize",
    "serialize_graph",
    "uniform_matroid",
]
