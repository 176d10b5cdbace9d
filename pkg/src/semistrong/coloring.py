"""Edge colorings, their verification, and the per-edge bookkeeping sets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import AlreadyColored, PartialColoring, UnknownVertex
from .graph import Graph, iter_bits
from .kinds import ColoringKind
from .matchings import class_ok

JSON_FORMAT = "ss-coloring/1"


@dataclass(frozen=True)
class EdgeColoring:
    """Colors in ``1..k`` aligned with ``Graph.edges``; ``None`` marks an uncolored edge."""

    k: int
    colors: tuple[int | None, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 0:
            raise ValueError("palette size must be non-negative")
        for c in self.colors:
            if c is not None and not 1 <= c <= self.k:
                raise ValueError(f"color {c} outside 1..{self.k}")

    @classmethod
    def empty(cls, g: Graph, k: int) -> "EdgeColoring":
        return cls(k, (None,) * g.m)

    @classmethod
    def rainbow(cls, g: Graph) -> "EdgeColoring":
        return cls(g.m, tuple(range(1, g.m + 1)))

    @classmethod
    def from_mapping(cls, g: Graph, mapping: Mapping[Sequence[int], int], k: int | None = None) -> "EdgeColoring":
        colors: list[int | None] = [None] * g.m
        for e, c in mapping.items():
            colors[g.edge_id(e)] = int(c)
        if k is None:
            k = max((c for c in colors if c is not None), default=0)
        return cls(k, tuple(colors))

    @property
    def is_total(self) -> bool:
        return None not in self.colors

    @property
    def num_colors(self) -> int:
        """Number of distinct colors actually used."""
        return len({c for c in self.colors if c is not None})

    def with_color(self, i: int, color: int | None) -> "EdgeColoring":
        cols = list(self.colors)
        cols[i] = color
        return EdgeColoring(self.k, tuple(cols))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            if c is not None:
                out.setdefault(c, []).append(i)
        return dict(sorted(out.items()))

    def as_mapping(self, g: Graph) -> dict[tuple[int, int], int | None]:
        return dict(zip(g.edges, self.colors))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    color: int | None = None
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _require_total(g: Graph, c: EdgeColoring) -> None:
    if len(c.colors) != g.m:
        raise ValueError(f"coloring has {len(c.colors)} entries for {g.m} edges")
    if not c.is_total:
        first = g.edges[c.colors.index(None)]
        raise PartialColoring(f"edge {first} is uncolored")


def verify(g: Graph, c: EdgeColoring, kind: ColoringKind) -> Verdict:
    """Check that the total coloring ``c`` is of the given kind.

    The returned :class:`Verdict` is truthy on success; otherwise it names
    the first violation (lowest color class, then lowest edge).
    """
    _require_total(g, c)
    if kind.name == "relaxed":
        return _verify_relaxed(g, c, kind.s, kind.t)
    mkind = kind.class_kind
    adj = g.vertex_masks
    for color, ids in c.classes().items():
        ends = [g.edges[i] for i in ids]
        vertices = 0
        for a, b in ends:
            vertices |= 1 << a | 1 << b
        if class_ok(mkind, adj, ends, vertices):
            continue
        return Verdict(False, _class_reason(mkind.name, adj, ends, vertices, mkind.r), color,
                       tuple(_offenders(mkind.name, adj, ends, vertices, mkind.r)))
    return Verdict(True)


def _class_reason(name, adj, ends, vertices, r) -> str:
    if vertices.bit_count() != 2 * len(ends):
        return "class is not a matching"
    return {
        "induced": "class is not an induced matching",
        "semistrong": "class has an edge with no endpoint of degree 1 in the induced subgraph",
        "degenerate": f"induced subgraph of class is not {r}-degenerate",
    }[name]


def _offenders(name, adj, ends, vertices, r) -> list[tuple[int, int]]:
    seen: dict[int, tuple[int, int]] = {}
    for e in ends:
        for x in e:
            if x in seen:
                return sorted([seen[x], e])
            seen[x] = e
    if name == "induced":
        return [e for e in ends if (adj[e[0]] & vertices).bit_count() > 1 or (adj[e[1]] & vertices).bit_count() > 1][:1]
    if name == "semistrong":
        return [e for e in ends if (adj[e[0]] & vertices).bit_count() > 1 and (adj[e[1]] & vertices).bit_count() > 1][:1]
    # degenerate: report the edges inside the peeling core
    rem = vertices
    changed = True
    while changed:
        changed = False
        for x in iter_bits(rem):
            if (adj[x] & rem).bit_count() <= r:
                rem &= ~(1 << x)
                changed = True
    return [e for e in ends if rem >> e[0] & 1 or rem >> e[1] & 1]


def _verify_relaxed(g: Graph, c: EdgeColoring, s: int, t: int) -> Verdict:
    tab = g.tables
    cols = c.colors
    for i, e in enumerate(g.edges):
        near = [j for j in iter_bits(tab.nbr[i]) if cols[j] == cols[i]]
        if len(near) > s:
            return Verdict(False, f"{len(near)} adjacent edges share the color (limit {s})", cols[i],
                           (e,) + tuple(g.edges[j] for j in near))
        far = [j for j in iter_bits(tab.n2[i] & ~tab.nbr[i]) if cols[j] == cols[i]]
        if len(far) > t:
            return Verdict(False, f"{len(far)} distance-2 edges share the color (limit {t})", cols[i],
                           (e,) + tuple(g.edges[j] for j in far))
    return Verdict(True)


def conflicts_per_edge(g: Graph, colors: Sequence[int | None]) -> list[int]:
    """Per edge, how many equal-colored edges sit at distance exactly 2."""
    tab = g.tables
    out = []
    for i in range(g.m):
        ci = colors[i]
        if ci is None:
            out.append(0)
            continue
        out.append(sum(1 for j in iter_bits(tab.n2[i] & ~tab.nbr[i]) if colors[j] == ci))
    return out


def count_distance2_conflicts(g: Graph, c: EdgeColoring) -> int:
    """Unordered equal-colored pairs at edge distance exactly 2."""
    _require_total(g, c)
    return sum(conflicts_per_edge(g, c.colors)) // 2


def colors_at_vertex(g: Graph, c: EdgeColoring, v: int) -> set[int]:
    if not 0 <= v < g.n:
        raise UnknownVertex(f"vertex {v} not in [0, {g.n})")
    inc = g.tables.incident[v]
    return {c.colors[i] for i in iter_bits(inc) if c.colors[i] is not None}


def available_colors(g: Graph, c: EdgeColoring, e: Sequence[int], k: int | None = None) -> set[int]:
    """Colors of ``1..k`` not present on any colored edge within distance 2 of ``e``."""
    i = g.edge_id(e)
    if c.colors[i] is not None:
        raise AlreadyColored(f"edge {g.edges[i]} already has color {c.colors[i]}")
    k = c.k if k is None else k
    used = {c.colors[j] for j in iter_bits(g.tables.n2[i])}
    return set(range(1, k + 1)) - used


# JSON document ------------------------------------------------------------


def to_document(g: Graph, c: EdgeColoring) -> dict:
    return {
        "format": JSON_FORMAT,
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "k": c.k,
        "colors": list(c.colors),
    }


def from_document(doc: Mapping) -> tuple[Graph, EdgeColoring]:
    """Read a coloring document; ``edges`` may be in any order and orientation."""
    if doc.get("format") != JSON_FORMAT:
        raise ValueError(f"expected format {JSON_FORMAT!r}, got {doc.get('format')!r}")
    edges = [tuple(e) for e in doc["edges"]]
    colors = doc["colors"]
    if len(colors) != len(edges):
        raise ValueError("colors must align with edges")
    g = Graph(int(doc["n"]), edges)
    aligned: list[int | None] = [None] * g.m
    for e, col in zip(edges, colors):
        aligned[g.edge_id(e)] = None if col is None else int(col)
    return g, EdgeColoring(int(doc["k"]), tuple(aligned))


def dumps(g: Graph, c: EdgeColoring) -> str:
    return json.dumps(to_document(g, c))


def loads(text: str) -> tuple[Graph, EdgeColoring]:
    return from_document(json.loads(text))


def graph_document(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}
