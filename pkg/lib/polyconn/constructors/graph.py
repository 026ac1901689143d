"""Set functions of multigraphs: λ_G, r_G and the cycle matroid.

For an edge set X, V(X) is the set of vertices incident with at least one edge of
X; a loop contributes its single endpoint once.
"""

from __future__ import annotations

import networkx as nx
import numpy as np
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from polyconn.constructors.matroids import Member, SubsetFamily
from polyconn.core.ground import LABEL_PATTERN, GroundSet, all_masks
from polyconn.core.setfunction import SetFunction
from polyconn.exceptions import ConstructionError


class Edge(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    ends: tuple[str, str]

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


class Graph(BaseModel):
    """A labelled multigraph; loops and parallel edges are allowed.

    The edge labels, in order, form the ground set of every derived set function.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @model_validator(mode="after")
    def labels_are_consistent(self) -> Self:
        seen: set[str] = set()
        for vertex in self.vertices:
            if not LABEL_PATTERN.fullmatch(vertex):
                raise ConstructionError(repr(vertex), "invalid vertex label")
            if vertex in seen:
                raise ConstructionError(vertex, "duplicate vertex")
            seen.add(vertex)
        # edge labels are validated (distinct, well-formed, capped) by the ground set
        GroundSet(edge.label for edge in self.edges)
        for edge in self.edges:
            for end in edge.ends:
                if end not in seen:
                    raise ConstructionError(end, f"unknown endpoint of edge {edge.label}")
        return self

    @classmethod
    def from_edges(
        cls, edges: list[tuple[str, str, str]], vertices: list[str] | None = None
    ) -> Graph:
        """Build from ``(label, u, v)`` triples; vertices default to first appearance order."""
        if vertices is None:
            vertices = list(dict.fromkeys(end for _, u, v in edges for end in (u, v)))
        return cls(
            vertices=tuple(vertices),
            edges=tuple(Edge(label=label, ends=(u, v)) for label, u, v in edges),
        )

    @property
    def ground(self) -> GroundSet:
        return GroundSet(edge.label for edge in self.edges)

    def incidence_masks(self) -> dict[str, int]:
        """For each vertex, the mask of the edges incident with it."""
        masks = dict.fromkeys(self.vertices, 0)
        for i, edge in enumerate(self.edges):
            for end in set(edge.ends):
                masks[end] |= 1 << i
        return masks

    def isolated_vertices(self) -> list[str]:
        return [vertex for vertex, mask in self.incidence_masks().items() if mask == 0]

    def without_isolated(self) -> Graph:
        isolated = set(self.isolated_vertices())
        return Graph(
            vertices=tuple(v for v in self.vertices if v not in isolated), edges=self.edges
        )

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(*edge.ends, key=edge.label)
        return graph

    def leaves(self) -> set[str]:
        """Vertices of degree one (a loop adds two to the degree of its vertex)."""
        return {vertex for vertex, degree in self.to_networkx().degree() if degree == 1}

    def endpoint_family(self) -> SubsetFamily:
        """Each edge as the set of its endpoints, over the vertex set."""
        return SubsetFamily(
            base=self.vertices,
            members=tuple(
                Member(label=edge.label, subset=frozenset(edge.ends)) for edge in self.edges
            ),
        )

    def vertex_counts(self) -> np.ndarray:
        """|V(X)| for every edge mask X."""
        masks = all_masks(len(self.edges))
        counts = np.zeros(masks.size, dtype=np.int64)
        for incident in self.incidence_masks().values():
            counts += (masks & incident) != 0
        return counts


def graph_rank(graph: Graph) -> SetFunction:
    """r_G(X) = |V(X)|, an integer-valued 2-polymatroid on the edges."""
    return SetFunction(graph.ground, graph.vertex_counts())


def graph_connectivity(graph: Graph, *, strip_isolated: bool = False) -> SetFunction:
    """λ_G(X) = |V(X)| + |V(E−X)| − |V|.

    Raises:
        ConstructionError: The graph has an isolated vertex (which would make
            λ_G(∅) negative) and ``strip_isolated`` is False.
    """
    isolated = graph.isolated_vertices()
    if isolated:
        if not strip_isolated:
            raise ConstructionError(isolated[0], "isolated vertex")
        graph = graph.without_isolated()
    counts = graph.vertex_counts()
    full = (1 << len(graph.edges)) - 1
    complements = full ^ all_masks(len(graph.edges))
    return SetFunction(graph.ground, counts + counts[complements] - len(graph.vertices))


def cycle_matroid(graph: Graph) -> SetFunction:
    """Rank function of M(G): r(X) = |V(X)| − c(X), counted as the edges of a spanning forest."""
    ranks = np.zeros(1 << len(graph.edges), dtype=np.int64)
    for mask in range(1, ranks.size):
        forest = UnionFind()
        rank = 0
        for i, edge in enumerate(graph.edges):
            if mask >> i & 1:
                u, v = edge.ends
                if forest[u] != forest[v]:
                    forest.union(u, v)
                    rank += 1
        ranks[mask] = rank
    return SetFunction(graph.ground, ranks)
