"""Shared type aliases for the polyconn package."""

from collections.abc import Iterable
from typing import Literal, TypeAlias

Mask: TypeAlias = int
SubsetLike: TypeAlias = int | Iterable[str]
ReturnFormat: TypeAlias = Literal["list", "dataframe"]
ConnectivitySource: TypeAlias = Literal["coverage", "graph", "matroid-lambda"]
VerifyKind: TypeAlias = Literal["connectivity", "polymatroid", "matroid", "auto"]
GenKind: TypeAlias = Literal["graph", "coverage", "uniform", "connectivity"]
GraphView: TypeAlias = Literal["lambda", "rank", "cycle"]
