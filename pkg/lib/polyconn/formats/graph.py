"""The ``graph v1`` text format.

Example document (a triangle)::

    graph v1
    vertices u v w
    e1 = u v
    e2 = v w
    e3 = u w

A loop repeats its endpoint (``e4 = v v``). Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from polyconn.constructors.graph import Edge, Graph
from polyconn.core.ground import LABEL_PATTERN
from polyconn.exceptions import ConstructionError, ParseError
from polyconn.formats._text import expect_header, significant_lines

MAGIC = "graph v1"


def parse_graph(document: str) -> Graph:
    lines = significant_lines(document)
    _, vertices = expect_header(lines, MAGIC, "vertices")
    known = set(vertices)
    edges: list[Edge] = []
    labels: set[str] = set()
    for number, text in lines:
        label, equals, ends_text = text.partition("=")
        if not equals:
            raise ParseError("expected '<edge> = <vertex> <vertex>'", number)
        label = label.strip()
        if not LABEL_PATTERN.fullmatch(label):
            raise ParseError(f"invalid edge label '{label}'", number)
        if label in labels:
            raise ParseError(f"duplicate edge '{label}'", number)
        ends = ends_text.split()
        if len(ends) < 2:
            raise ParseError(f"edge '{label}' needs two endpoints", number)
        if len(ends) > 2:
            raise ParseError(f"trailing garbage '{' '.join(ends[2:])}'", number)
        for end in ends:
            if end not in known:
                raise ParseError(f"unknown vertex '{end}'", number)
        labels.add(label)
        edges.append(Edge(label=label, ends=(ends[0], ends[1])))

    try:
        return Graph(vertices=tuple(vertices), edges=tuple(edges))
    except ConstructionError as exc:
        raise ParseError(exc.message) from None


def serialize_graph(graph: Graph) -> str:
    lines = [MAGIC, " ".join(["vertices", *graph.vertices])]
    lines.extend(f"{edge.label} = {edge.ends[0]} {edge.ends[1]}" for edge in graph.edges)
    return "\n".join(lines) + "\n"
