"""Constructive semistrong colorings: the Δ² potential descent and a tree coloring."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .coloring import EdgeColoring, conflicts_per_edge, verify
from .errors import InternalInvariantViolated, NotATree
from .graph import Graph, diameter, eccentricities, is_tree, iter_bits
from .kinds import SEMISTRONG


@dataclass(frozen=True)
class DescentStep:
    edge: tuple[int, int]
    old: int
    new: int
    iota_before: int
    iota_after: int


@dataclass
class DescentTrace:
    initial_iota: int = 0
    steps: list[DescentStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def strictly_decreasing(self) -> bool:
        prev = self.initial_iota
        for s in self.steps:
            if not (s.iota_before == prev and s.iota_after < s.iota_before):
                return False
            prev = s.iota_after
        return True


def delta_squared_palette(g: Graph) -> int:
    """Δ², or Δ² - 1 when no edge joins two vertices of maximum degree."""
    d = g.max_degree
    if d >= 2:
        deg = g.degrees()
        if not any(deg[u] == d and deg[v] == d for u, v in g.edges):
            return d * d - 1
    return d * d


def semistrong_delta_squared(g: Graph, palette: int | None = None) -> tuple[EdgeColoring, DescentTrace]:
    """Semistrong coloring with at most Δ² colors by conflict descent.

    First every edge greedily takes the lowest color unused on its
    neighbourhood and its square partners; this is proper and never repeats
    a color across a square partner pair, but may leave equal colors at
    distance 2. While some edge has two or more such conflicts, it is moved
    to the lowest color that is free on its neighbourhood and partners and
    appears at most once elsewhere in its 2-neighbourhood. That strictly
    lowers the total conflict count, and once every edge has at most one
    conflict the coloring is semistrong.
    """
    if g.m == 0:
        return EdgeColoring(0, ()), DescentTrace()
    P = delta_squared_palette(g) if palette is None else palette
    tab = g.tables
    block = [tab.nbr[i] | tab.partners[i] for i in range(g.m)]
    order = sorted(range(g.m), key=lambda i: (-block[i].bit_count(), i))
    colors: list[int | None] = [None] * g.m
    for e in order:
        used = {colors[j] for j in iter_bits(block[e])}
        colors[e] = _lowest(P, lambda c: c not in used, g.edges[e])

    conf = conflicts_per_edge(g, colors)
    iota = sum(conf) // 2
    trace = DescentTrace(initial_iota=iota)
    far_of = [tab.n2[i] & ~block[i] for i in range(g.m)]
    while True:
        worst = max(range(g.m), key=lambda i: (conf[i], -i))
        if conf[worst] < 2:
            break
        e = worst
        forbidden = {colors[j] for j in iter_bits(block[e])}
        far = list(iter_bits(far_of[e]))
        usage: dict[int, int] = {}
        for j in far:
            usage[colors[j]] = usage.get(colors[j], 0) + 1
        alpha = _lowest(P, lambda c: c not in forbidden and usage.get(c, 0) <= 1, g.edges[e])
        old = colors[e]
        colors[e] = alpha
        for j in far:
            if colors[j] == old:
                conf[j] -= 1
            elif colors[j] == alpha:
                conf[j] += 1
        before = iota
        iota += usage.get(alpha, 0) - conf[e]
        conf[e] = usage.get(alpha, 0)
        if iota >= before:
            raise InternalInvariantViolated("descent step failed to lower the conflict count")
        trace.steps.append(DescentStep(g.edges[e], old, alpha, before, iota))
    return EdgeColoring(P, tuple(colors)), trace


def _lowest(P: int, ok, edge) -> int:
    for c in range(1, P + 1):
        if ok(c):
            return c
    raise InternalInvariantViolated(f"no admissible color among 1..{P} for edge {edge}")


def tree_semistrong(t: Graph) -> EdgeColoring:
    """Semistrong coloring of a tree with at most Δ + 1 colors (Δ if diameter <= 4).

    Root the tree at a center and color top-down. The child edges of a
    vertex get the lowest colors avoiding its parent edge and the edge
    above that. Then for every edge ``pc`` (``c`` the child) no edge of the
    same color touches a child of ``c``, so ``c`` has degree 1 in the
    induced subgraph of the color class.
    """
    if not is_tree(t):
        raise NotATree("input is not a tree")
    if t.m == 0:
        return EdgeColoring(0, ())
    d = t.max_degree
    target = d if diameter(t) <= 4 else d + 1
    ecc = eccentricities(t)
    root = min(range(t.n), key=lambda v: (ecc[v], v))
    colors: list[int | None] = [None] * t.m
    parent_color = {root: None}
    grand_color = {root: None}
    q = deque([root])
    seen = {root}
    while q:
        x = q.popleft()
        avoid = {parent_color[x], grand_color[x]}
        palette = (c for c in range(1, target + 1) if c not in avoid)
        for y in t.neighbors(x):
            if y in seen:
                continue
            seen.add(y)
            c = next(palette, None)
            if c is None:
                return _tree_fallback(t, target)
            colors[t.edge_id((x, y))] = c
            parent_color[y] = c
            grand_color[y] = parent_color[x]
            q.append(y)
    out = EdgeColoring(target, tuple(colors))
    if not verify(t, out, SEMISTRONG):
        return _tree_fallback(t, target)
    return out


def _tree_fallback(t: Graph, target: int) -> EdgeColoring:
    from .solver import SearchBudget, feasible

    out = feasible(t, target, SEMISTRONG, SearchBudget(max_nodes=None, max_seconds=None))
    if out is None:
        raise InternalInvariantViolated(f"tree admits no semistrong coloring with {target} colors")
    return out
