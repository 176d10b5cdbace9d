"""Immutable simple graphs and the edge-neighbourhood machinery.

Vertices are ``0..n-1``. Edges are canonical pairs ``(u, v)`` with ``u < v``
and carry stable integer ids given by their position in ``Graph.edges``,
which is sorted lexicographically. Edge sets returned by the public
functions are ``frozenset`` objects of canonical edges; the solvers work on
the integer bitmasks exposed by :meth:`Graph.tables`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    LoopEdge,
    ParallelEdge,
    SideNotEndpoint,
    UnknownEdge,
    UnknownVertex,
)

Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge]


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeTables:
    """Per-edge bitmasks over edge ids, precomputed once per graph."""

    incident: tuple[int, ...]  # per vertex: edges incident with it
    nbr: tuple[int, ...]  # N(e)
    n2: tuple[int, ...]  # N^2(e)
    side2: tuple[tuple[int, int], ...]  # (N_u^2(e), N_v^2(e)) for e = (u, v)
    partners: tuple[int, ...]  # L(e), symmetric closure


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> g.max_degree
    2
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for pair in edges:
            u, v = (int(x) for x in pair)
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertex(f"edge {pair!r} references a vertex outside [0, {n})")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            e = canonical(u, v)
            if e in canon:
                raise ParallelEdge(f"parallel edge {e}; use underlying_simple_graph")
            canon.add(e)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._index = {e: i for i, e in enumerate(self.edges)}
        self.max_degree = max((len(a) for a in self._adj), default=0)

    # basic queries -------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical(u, v) in self._index

    def edge_id(self, e: Sequence[int]) -> int:
        try:
            return self._index[canonical(int(e[0]), int(e[1]))]
        except (KeyError, IndexError, TypeError):
            raise UnknownEdge(f"{e!r} is not an edge of this graph") from None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise UnknownVertex(f"vertex {v} not in [0, {self.n})")

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph relabelled to ``0..k-1`` and the old labels."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        sub = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(keep), sub), keep

    @cached_property
    def vertex_masks(self) -> tuple[int, ...]:
        masks = []
        for a in self._adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    def edges_of(self, mask: int) -> frozenset:
        return frozenset(self.edges[i] for i in iter_bits(mask))

    def mask_of(self, edges: Iterable[Sequence[int]]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.edge_id(e)
        return m

    @cached_property
    def tables(self) -> EdgeTables:
        return _build_tables(self)

    # dunder --------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _build_tables(g: Graph) -> EdgeTables:
    incident = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    nbr, n2, side2, partners = [], [], [], []
    for i, (u, v) in enumerate(g.edges):
        me = ~(1 << i)
        nb = (incident[u] | incident[v]) & me
        sides = []
        for a, b in ((u, v), (v, u)):
            s = incident[a]
            for w in g._adj[a]:
                if w != b:
                    s |= incident[w]
            sides.append(s & me)
        nbr.append(nb)
        n2.append(sides[0] | sides[1])
        side2.append((sides[0], sides[1]))
        partners.append((sides[0] & sides[1]) & ~nb)
    # L(e) as written is not symmetric when e' meets a triangle on e; the
    # coloring arguments need the pairwise relation, so close it.
    closed = list(partners)
    for i, p in enumerate(partners):
        for j in iter_bits(p):
            closed[j] |= 1 << i
    return EdgeTables(tuple(incident), tuple(nbr), tuple(n2), tuple(side2), tuple(closed))


def underlying_simple_graph(n: int, multi_edges: Iterable[Sequence[int]]) -> Graph:
    """Collapse a multigraph edge list into its underlying simple graph.

    ``multi_edges`` holds ``(u, v)`` or ``(u, v, multiplicity)`` entries;
    every adjacent pair ends up joined by exactly one edge.
    """
    pairs = set()
    for item in multi_edges:
        u, v = int(item[0]), int(item[1])
        mult = int(item[2]) if len(item) > 2 else 1
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if mult > 0:
            pairs.add(canonical(u, v))
    return Graph(n, pairs)


def _eid(g: Graph, e: Sequence[int]) -> int:
    return g.edge_id(e)


def edge_neighborhood(g: Graph, e: Sequence[int]) -> EdgeSet:
    """Edges sharing exactly one endpoint with ``e``."""
    return g.edges_of(g.tables.nbr[_eid(g, e)])


def two_edge_neighborhood(g: Graph, e: Sequence[int]) -> EdgeSet:
    """Edges at distance 1 or 2 from ``e`` (``e`` itself excluded)."""
    return g.edges_of(g.tables.n2[_eid(g, e)])


def directed_neighborhoods(g: Graph, e: Sequence[int], side: int) -> tuple[EdgeSet, EdgeSet]:
    """Return ``(N_side(e), N_side^2(e))``.

    The second set holds edges incident with ``side`` together with edges
    reached from ``e`` through one edge at ``side``.
    """
    i = _eid(g, e)
    u, v = g.edges[i]
    if side == u:
        s2 = g.tables.side2[i][0]
    elif side == v:
        s2 = g.tables.side2[i][1]
    else:
        raise SideNotEndpoint(f"{side} is not an endpoint of {g.edges[i]}")
    near = g.tables.incident[side] & ~(1 << i)
    return g.edges_of(near), g.edges_of(s2)


def square_partners(g: Graph, e: Sequence[int]) -> EdgeSet:
    """Distance-2 edges that may never share a color with ``e`` in a semistrong coloring.

    On triangle-free graphs these are exactly the edges lying on a common
    4-cycle with ``e``. In general an edge ``f`` belongs here when both
    endpoints of one of ``e``, ``f`` see an endpoint of the other.
    """
    return g.edges_of(g.tables.partners[_eid(g, e)])


def edge_profile(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    """Return ``(k(e), l(e))``: sizes of the edge neighbourhood and partner set."""
    i = _eid(g, e)
    t = g.tables
    return t.nbr[i].bit_count(), t.partners[i].bit_count()


def edge_distance(g: Graph, e: Sequence[int], f: Sequence[int]) -> int | float:
    """Distance between two edges: 0 if equal, 1 if adjacent, 2 via one edge, else inf."""
    i, j = _eid(g, e), _eid(g, f)
    if i == j:
        return 0
    t = g.tables
    if t.nbr[i] >> j & 1:
        return 1
    if t.n2[i] >> j & 1:
        return 2
    return math.inf


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g._adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        parts.append(sorted(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def eccentricities(g: Graph) -> list[float]:
    out = []
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        out.append(max(dist.values()) if len(dist) == g.n else math.inf)
    return out


def diameter(g: Graph) -> float:
    return max(eccentricities(g), default=0)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartition(g: Graph) -> list[int] | None:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g._adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return side
