"""The setfn v1 and graph v1 text formats and the shared subset grammar."""

from .graph import parse_graph, serialize_graph
from .setfn import parse, parse_value, serialize
from .subsets import parse_subset, split_subset

__all__ = [
    "parse",
    "parse_graph",
    "parse_subset",
    "parse_value",
    "serialize",
    "serialize_graph",
    "split_subset",
]
