"""Matching classes and their maximum sizes.

All four classes are closed under taking subsets, which is what makes both
the pairwise pruning here and the class-violation pruning in the exact
coloring solver sound.
"""

from __future__ import annotations

import time
from typing import Iterable, Sequence

from .errors import BudgetExceeded, EdgeNotInGraph, UnknownEdge
from .graph import Graph, iter_bits
from .kinds import MatchingKind


def is_r_degenerate(adj: Sequence[int], vertices: int, r: int) -> bool:
    """Min-degree peeling on the subgraph induced by the vertex bitmask."""
    rem = vertices
    while rem:
        for x in iter_bits(rem):
            if (adj[x] & rem).bit_count() <= r:
                rem &= ~(1 << x)
                break
        else:
            return False
    return True


def class_ok(kind: MatchingKind, adj: Sequence[int], ends: Sequence[tuple[int, int]], vertices: int) -> bool:
    """Check a candidate class given its edge endpoints and covered-vertex mask.

    ``vertices`` must equal the union of ``ends``; if it has fewer than
    ``2 * len(ends)`` vertices the edges are not pairwise disjoint.
    """
    if vertices.bit_count() != 2 * len(ends):
        return False
    name = kind.name
    if name == "plain":
        return True
    if name == "induced":
        return all((adj[a] & vertices) == 1 << b and (adj[b] & vertices) == 1 << a for a, b in ends)
    if name == "semistrong":
        for a, b in ends:
            if (adj[a] & vertices).bit_count() > 1 and (adj[b] & vertices).bit_count() > 1:
                return False
        return True
    return is_r_degenerate(adj, vertices, kind.r)


def _ends_and_mask(g: Graph, m: Iterable[Sequence[int]]) -> tuple[list[tuple[int, int]], int]:
    ends, vertices = [], 0
    for e in m:
        try:
            i = g.edge_id(e)
        except UnknownEdge:
            raise EdgeNotInGraph(f"{e!r} is not an edge of the graph") from None
        u, v = g.edges[i]
        ends.append((u, v))
        vertices |= 1 << u | 1 << v
    return ends, vertices


def classify(g: Graph, m: Iterable[Sequence[int]], kind: MatchingKind) -> bool:
    """Whether the edge set ``m`` is a matching of the given kind in ``g``.

    >>> from semistrong.families import path
    >>> from semistrong.kinds import SEMISTRONG_MATCHING
    >>> classify(path(6), [(0, 1), (2, 3), (4, 5)], SEMISTRONG_MATCHING)
    False
    """
    ends, vertices = _ends_and_mask(g, set(map(tuple, m)))
    return class_ok(kind, g.vertex_masks, ends, vertices)


def semistrong_violations(g: Graph, m: Iterable[Sequence[int]]) -> list[tuple[int, int]]:
    """Edges of ``m`` whose two endpoints both have degree >= 2 in ``G[V(m)]``.

    Such a violation survives every enlargement of ``m``.
    """
    ends, vertices = _ends_and_mask(g, set(map(tuple, m)))
    adj = g.vertex_masks
    return sorted(
        (a, b) for a, b in ends
        if (adj[a] & vertices).bit_count() > 1 and (adj[b] & vertices).bit_count() > 1
    )


def pair_conflicts(g: Graph, kind: MatchingKind) -> list[int]:
    """Per edge, the bitmask of edges it can never share a class with."""
    adj = g.vertex_masks
    t = g.tables
    out = []
    for i, (u, v) in enumerate(g.edges):
        conf = t.nbr[i]
        if kind.name != "plain":
            for j in iter_bits(t.n2[i] & ~t.nbr[i]):
                x, y = g.edges[j]
                vm = 1 << u | 1 << v | 1 << x | 1 << y
                if not class_ok(kind, adj, ((u, v), (x, y)), vm):
                    conf |= 1 << j
        out.append(conf)
    return out


def max_matching_size(
    g: Graph,
    kind: MatchingKind,
    max_nodes: int | None = 10**7,
    max_seconds: float | None = None,
) -> tuple[int, frozenset]:
    """Maximum size of a matching of ``kind`` with a witness, by branch and bound.

    Edges are branched on in order of decreasing degree sum (ties by id),
    include-branch first; the bound is current size plus the number of
    still-compatible candidates.
    """
    if g.m == 0:
        return 0, frozenset()
    deg = g.degrees()
    order = sorted(range(g.m), key=lambda i: (-(deg[g.edges[i][0]] + deg[g.edges[i][1]]), i))
    pos = {e: p for p, e in enumerate(order)}
    conf_e = pair_conflicts(g, kind)
    conf = []
    for e in order:
        c = 0
        for j in iter_bits(conf_e[e]):
            c |= 1 << pos[j]
        conf.append(c)
    adj = g.vertex_masks
    ends_by_pos = [g.edges[e] for e in order]
    pairwise_exact = kind.name in ("plain", "induced")

    best_size = 0
    best: list[int] = []
    nodes = 0
    start = time.monotonic()

    def rec(chosen: list[int], ends: list[tuple[int, int]], vertices: int, cand: int) -> None:
        nonlocal best_size, best, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded("matching search exceeded node budget", nodes, time.monotonic() - start)
        if max_seconds is not None and nodes & 1023 == 0 and time.monotonic() - start > max_seconds:
            raise BudgetExceeded("matching search exceeded time budget", nodes, time.monotonic() - start)
        if len(chosen) > best_size:
            best_size, best = len(chosen), list(chosen)
        if len(chosen) + cand.bit_count() <= best_size:
            return
        low = cand & -cand
        p = low.bit_length() - 1
        a, b = ends_by_pos[p]
        nv = vertices | 1 << a | 1 << b
        ends.append((a, b))
        if pairwise_exact or class_ok(kind, adj, ends, nv):
            chosen.append(p)
            rec(chosen, ends, nv, cand & ~conf[p] & ~low)
            chosen.pop()
        ends.pop()
        rec(chosen, ends, vertices, cand & ~low)

    rec([], [], 0, (1 << g.m) - 1)
    return best_size, frozenset(ends_by_pos[p] for p in best)
