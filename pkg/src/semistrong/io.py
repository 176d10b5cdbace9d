"""Reading graphs from text streams and writing JSON/DOT."""

from __future__ import annotations

import json
from typing import Iterator, TextIO

from .coloring import EdgeColoring
from .families import parse_graph6
from .graph import Graph
from .survey import iter_graph6_lines


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_dict(doc: dict) -> Graph:
    return Graph(int(doc["n"]), [tuple(e) for e in doc["edges"]])


def read_graphs(stream: TextIO, fmt: str = "g6") -> Iterator[Graph]:
    """Graphs from ``stream``: one graph6 per line, or one JSON ``{"n", "edges"}`` document."""
    if fmt == "g6":
        for line in iter_graph6_lines(stream):
            yield parse_graph6(line)
    elif fmt == "json":
        yield graph_from_dict(json.load(stream))
    else:
        raise ValueError(f"unknown input format {fmt!r}")


def to_dot(g: Graph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        c = None if coloring is None else coloring.colors[i]
        lines.append(f"  {u} -- {v};" if c is None else f'  {u} -- {v} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
