"""Exact chromatic indices by incremental-k backtracking.

For each palette size ``k`` the search assigns colors edge by edge. A color
is admissible for an edge when no edge it pairwise conflicts with already
carries it and the enlarged color class still passes the class predicate
(every class property here is inherited by subsets, so a failing class can
never be repaired). New colors are opened in increasing order only, which
removes palette permutations. When the remaining uncolored edges pairwise
conflict, they need distinct colors, and the search is finished off by a
system of distinct representatives instead of further branching.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .coloring import EdgeColoring, verify
from .errors import BudgetExceeded, InternalInvariantViolated
from .graph import Graph, components, iter_bits
from .kinds import ColoringKind
from .matchings import is_r_degenerate, pair_conflicts


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = 10**7
    max_seconds: float | None = 60.0
    deterministic: bool = True

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass
class SolveResult:
    value: int
    witness: EdgeColoring
    lower_bound_method: str  # "exhausted" (value - 1 refuted by search) or "trivial"
    nodes: int = 0
    seconds: float = 0.0
    refuted: list[int] = field(default_factory=list)


# distinct representatives --------------------------------------------------


def distinct_representatives(sets: Sequence[set[int] | frozenset[int]]) -> list[int] | None:
    """Pick pairwise distinct elements, one from each set, or ``None`` if Hall fails.

    Uses augmenting paths (Kuhn's algorithm); sets are tried smallest first.
    """
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for x in sorted(sets[i]):
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in sorted(range(len(sets)), key=lambda i: (len(sets[i]), i)):
        if not augment(i, set()):
            return None
    pick = [0] * len(sets)
    for x, i in owner.items():
        pick[i] = x
    return pick


def complete_by_distinct_representatives(
    g: Graph,
    partial: EdgeColoring,
    uncolored: Sequence[Sequence[int]],
    availability: Sequence[set[int] | frozenset[int]],
) -> EdgeColoring | None:
    """Give every edge of ``uncolored`` a distinct color from its availability set.

    Returns the completed coloring, or ``None`` when no system of distinct
    representatives exists.
    """
    if len(uncolored) != len(availability):
        raise ValueError("one availability set per uncolored edge is required")
    pick = distinct_representatives(availability)
    if pick is None:
        return None
    colors = list(partial.colors)
    for e, c in zip(uncolored, pick):
        colors[g.edge_id(e)] = c
    k = max([partial.k] + pick)
    return EdgeColoring(k, tuple(colors))


# search engine -------------------------------------------------------------


def kind_conflicts(g: Graph, kind: ColoringKind) -> list[int]:
    """Per edge, the edges that can never share its color (the pair alone is invalid)."""
    mk = kind.class_kind
    if mk is not None:
        return pair_conflicts(g, mk)
    t = g.tables
    out = []
    for i in range(g.m):
        c = 0
        if kind.s == 0:
            c |= t.nbr[i]
        if kind.t == 0:
            c |= t.n2[i] & ~t.nbr[i]
        out.append(c)
    return out


class _Search:
    def __init__(self, g: Graph, k: int, kind: ColoringKind, budget: SearchBudget,
                 symmetry_breaking: bool = True, order: str = "static", start: float | None = None,
                 nodes: int = 0):
        self.g = g
        self.k = k
        self.kind = kind
        self.mkind = kind.class_kind
        self.budget = budget
        self.symmetry = symmetry_breaking
        self.dynamic = order == "dynamic"
        self.adj = g.vertex_masks
        self.tab = g.tables
        self.conf = kind_conflicts(g, kind)
        n2 = self.tab.n2
        self.static_order = sorted(range(g.m), key=lambda i: (-n2[i].bit_count(), i))
        self.color = [0] * g.m
        self.cls_edges = [0] * (k + 1)  # bitmask of edges per color
        self.cls_verts = [0] * (k + 1)
        self.cls_ends: list[list[tuple[int, int]]] = [[] for _ in range(k + 1)]
        self.nodes = nodes
        self.start = time.monotonic() if start is None else start

    # -- admissibility -----------------------------------------------------
    def admissible(self, e: int, c: int) -> bool:
        if self.cls_edges[c] & self.conf[e]:
            return False
        mk = self.mkind
        if mk is None:
            return self._relaxed_ok(e, c)
        if mk.name in ("plain", "induced"):
            return True  # pairwise conflicts are exact for these
        a, b = self.g.edges[e]
        verts = self.cls_verts[c] | 1 << a | 1 << b
        if mk.name == "semistrong":
            adj = self.adj
            if (adj[a] & verts).bit_count() > 1 and (adj[b] & verts).bit_count() > 1:
                return False
            for x, y in self.cls_ends[c]:
                if (adj[x] & verts).bit_count() > 1 and (adj[y] & verts).bit_count() > 1:
                    return False
            return True
        return is_r_degenerate(self.adj, verts, mk.r)

    def _relaxed_ok(self, e: int, c: int) -> bool:
        tab = self.tab
        same = self.cls_edges[c] | 1 << e
        s, t = self.kind.s, self.kind.t
        for f in iter_bits(same & (tab.n2[e] | 1 << e)):
            nb = tab.nbr[f]
            if (nb & same).bit_count() > s:
                return False
            if (tab.n2[f] & ~nb & same).bit_count() > t:
                return False
        return True

    def assign(self, e: int, c: int) -> None:
        a, b = self.g.edges[e]
        self.color[e] = c
        self.cls_edges[c] |= 1 << e
        self.cls_verts[c] |= 1 << a | 1 << b
        self.cls_ends[c].append((a, b))

    def unassign(self, e: int, c: int) -> None:
        a, b = self.g.edges[e]
        self.color[e] = 0
        self.cls_edges[c] &= ~(1 << e)
        self.cls_verts[c] &= ~(1 << a | 1 << b)
        self.cls_ends[c].pop()

    def _tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"search exceeded {b.max_nodes} nodes", self.nodes, time.monotonic() - self.start)
        if b.max_seconds is not None and self.nodes & 1023 == 0:
            el = time.monotonic() - self.start
            if el > b.max_seconds:
                raise BudgetExceeded(f"search exceeded {b.max_seconds} s", self.nodes, el)

    def _choices(self, e: int, used: int) -> list[int]:
        top = min(self.k, used + 1) if self.symmetry else self.k
        return [c for c in range(1, top + 1) if self.admissible(e, c)]

    # -- search ------------------------------------------------------------
    def run(self) -> list[int] | None:
        if self.k <= 0:
            return None if self.g.m else []
        if self._dfs((1 << self.g.m) - 1, 0):
            return list(self.color)
        return None

    def _is_clique(self, unc: int) -> bool:
        conf = self.conf
        for e in iter_bits(unc):
            rest = unc & ~(1 << e)
            if rest & ~conf[e]:
                return False
        return True

    def _finish_by_sdr(self, unc: int, used: int) -> bool | None:
        """Exact completion when the uncolored edges pairwise conflict.

        Each edge then lands in its own class, so admissibility against the
        current classes is the whole story. With symmetry breaking, fresh
        colors are interchangeable, so a fixed set of them is offered.
        """
        edges = list(iter_bits(unc))
        sets = []
        for e in edges:
            top = self.k
            avail = {c for c in range(1, min(top, used) + 1) if self.admissible(e, c)}
            avail.update(range(used + 1, top + 1))  # unused colors: class is empty
            sets.append(avail)
        pick = distinct_representatives(sets)
        if pick is None:
            return False
        for e, c in zip(edges, pick):
            self.assign(e, c)
        return True

    def _dfs(self, unc: int, used: int) -> bool:
        if not unc:
            return True
        self._tick()
        if self._is_clique(unc):
            return self._finish_by_sdr(unc, used)
        if self.dynamic:
            best_e, best_ch = -1, None
            for e in iter_bits(unc):
                ch = self._choices(e, used)
                if best_ch is None or len(ch) < len(best_ch) or (
                        len(ch) == len(best_ch) and self._rank[e] < self._rank[best_e]):
                    best_e, best_ch = e, ch
                    if not ch:
                        return False
            e, choices = best_e, best_ch
        else:
            e = next(x for x in self.static_order if unc >> x & 1)
            choices = self._choices(e, used)
        # forward check: every uncolored edge conflicting with e keeps a color
        for c in choices:
            self.assign(e, c)
            nu = unc & ~(1 << e)
            nused = max(used, c)
            if self._forward_ok(e, nu, nused) and self._dfs(nu, nused):
                return True
            self.unassign(e, c)
        return False

    def _forward_ok(self, e: int, unc: int, used: int) -> bool:
        if used < self.k:
            return True
        for f in iter_bits(unc & self.conf[e]):
            if not any(self.admissible(f, c) for c in range(1, self.k + 1)):
                return False
        return True

    @property
    def _rank(self) -> list[int]:
        r = getattr(self, "_rank_cache", None)
        if r is None:
            r = [0] * self.g.m
            for p, e in enumerate(self.static_order):
                r[e] = p
            self._rank_cache = r
        return r


def feasible(
    g: Graph,
    k: int,
    kind: ColoringKind,
    budget: SearchBudget | None = None,
    *,
    symmetry_breaking: bool = True,
    order: str = "static",
) -> EdgeColoring | None:
    """Find a coloring of ``kind`` with at most ``k`` colors.

    Returns a verified coloring, or ``None`` once the search space is
    exhausted. Raises :class:`BudgetExceeded` if the budget runs out first.
    """
    colors, _ = _feasible(g, k, kind, budget or SearchBudget(), symmetry_breaking, order)
    return colors


def _feasible(g, k, kind, budget, symmetry_breaking, order, start=None, nodes=0):
    if k < 1:
        raise ValueError("k must be >= 1")
    s = _Search(g, k, kind, budget, symmetry_breaking, order, start, nodes)
    cols = s.run()
    if cols is None:
        return None, s.nodes
    coloring = EdgeColoring(k, tuple(cols))
    verdict = verify(g, coloring, kind)
    if not verdict:
        raise InternalInvariantViolated(f"search produced an invalid coloring: {verdict.reason}")
    return coloring, s.nodes


def conflict_clique_bound(g: Graph, kind: ColoringKind) -> int:
    """Size of the largest pairwise-conflicting edge set found greedily."""
    conf = kind_conflicts(g, kind)
    best = 1 if g.m else 0
    for start in range(g.m):
        clique = 1 << start
        cand = conf[start]
        size = 1
        while cand:
            # pick the candidate with most conflicts inside the candidate set
            x = max(iter_bits(cand), key=lambda f: ((conf[f] & cand).bit_count(), -f))
            clique |= 1 << x
            size += 1
            cand &= conf[x]
        best = max(best, size)
    return best


def lower_bound(g: Graph, kind: ColoringKind) -> int:
    lb = conflict_clique_bound(g, kind)
    if kind.class_kind is not None:
        lb = max(lb, g.max_degree)
    return lb


def chromatic_index(
    g: Graph,
    kind: ColoringKind,
    budget: SearchBudget | None = None,
    *,
    symmetry_breaking: bool = True,
    order: str = "static",
) -> SolveResult:
    """Least ``k`` admitting a coloring of ``kind``, with witness.

    Components are solved separately; the value is their maximum and the
    witness is their union. The budget covers the whole call.
    """
    budget = budget or SearchBudget()
    start = time.monotonic()
    if g.m == 0:
        return SolveResult(0, EdgeColoring(0, ()), "trivial")
    nodes = 0
    colors: list[int | None] = [None] * g.m
    value = 0
    exhausted = False
    refuted: list[int] = []
    parts = [c for c in components(g) if len(c) > 1]
    results = []
    for comp in parts:
        sub, labels = g.induced_subgraph(comp)
        lb = lower_bound(sub, kind)
        k = lb
        while True:
            wit, nodes = _feasible(sub, k, kind, budget, symmetry_breaking, order, start, nodes)
            if wit is not None:
                break
            refuted.append(k)
            k += 1
        results.append((sub, labels, wit, k, k > lb))
    value = max(r[3] for r in results)
    for sub, labels, wit, k, did_refute in results:
        if k == value and did_refute:
            exhausted = True
        for (a, b), c in zip(sub.edges, wit.colors):
            colors[g.edge_id((labels[a], labels[b]))] = c
    witness = EdgeColoring(value, tuple(colors))
    if not verify(g, witness, kind):
        raise InternalInvariantViolated("merged witness failed verification")
    return SolveResult(value, witness, "exhausted" if exhausted else "trivial", nodes,
                       time.monotonic() - start, sorted(set(refuted)))
