"""Batch evaluation of graph corpora against the known bounds and conjectures."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceeded
from .families import complete_bipartite, emit_graph6, parse_graph6, prism
from .graph import Graph, bipartition, is_connected
from .kinds import ColoringKind, SEMISTRONG
from .solver import SearchBudget, chromatic_index

REPORT_FORMAT = "ss-survey/1"
SURVEY_BUDGET = SearchBudget(max_nodes=10**7, max_seconds=60.0)

_K33 = complete_bipartite(3, 3)
_PRISM5 = prism(5)


def is_isomorphic(g: Graph, h: Graph, max_vertices: int = 12) -> bool:
    """Brute-force isomorphism test by degree-respecting backtracking."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > max_vertices:
        raise ValueError(f"brute-force isomorphism limited to {max_vertices} vertices")
    n = g.n
    gd, hd = g.degrees(), h.degrees()
    gadj, hadj = g.vertex_masks, h.vertex_masks
    order = sorted(range(n), key=lambda v: -gd[v])
    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or hd[w] != gd[v]:
                continue
            if all(((gadj[v] >> u) & 1) == ((hadj[w] >> image[u]) & 1) for u in order[:pos]):
                image[v] = w
                used |= 1 << w
                if extend(pos + 1):
                    return True
                used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)


def is_balanced_complete_bipartite(g: Graph) -> bool:
    """Whether ``g`` is ``K_{n,n}`` for some ``n >= 1``."""
    side = bipartition(g)
    if side is None or g.n == 0 or g.n % 2:
        return False
    a = side.count(0)
    b = g.n - a
    return a == b and g.m == a * b


@dataclass(frozen=True)
class SurveyRecord:
    graph6: str
    n: int
    m: int
    max_degree: int
    connected: bool
    kind: str
    value: int | None
    status: str  # solved | budget_exceeded
    lower_bound: str | None
    nodes: int
    flags: dict

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "connected": self.connected,
            "kind": self.kind,
            "value": self.value,
            "status": self.status,
            "lower_bound": self.lower_bound,
            "nodes": self.nodes,
            "flags": self.flags,
        }


def conjecture_flags(g: Graph, value: int) -> dict:
    d = g.max_degree
    return {
        "exceeds_thm_main": value > d * d,
        "exceeds_conj_general": d >= 1 and value > d * d - 1 and not is_balanced_complete_bipartite(g),
        "exceeds_conj_subcubic": d == 3 and value > 7
        and not is_isomorphic(g, _K33) and not is_isomorphic(g, _PRISM5),
        "exceeds_subcubic_thm": d == 3 and value > 8 and not is_isomorphic(g, _K33),
    }


def survey_graph(g: Graph, kind: ColoringKind = SEMISTRONG, budget: SearchBudget = SURVEY_BUDGET,
                 graph6: str | None = None) -> SurveyRecord:
    g6 = graph6 if graph6 is not None else emit_graph6(g)
    try:
        res = chromatic_index(g, kind, budget)
    except BudgetExceeded as exc:
        return SurveyRecord(g6, g.n, g.m, g.max_degree, is_connected(g), str(kind), None,
                            "budget_exceeded", None, exc.nodes, {})
    return SurveyRecord(g6, g.n, g.m, g.max_degree, is_connected(g), str(kind), res.value, "solved",
                        res.lower_bound_method, res.nodes, conjecture_flags(g, res.value))


def _survey_line(args) -> SurveyRecord:
    line, kind, budget = args
    return survey_graph(parse_graph6(line), kind, budget, graph6=line)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[str]:
    for raw in lines:
        s = raw.strip()
        if s.startswith(">>graph6<<"):
            s = s[len(">>graph6<<"):]
        if s:
            yield s


def run_survey(lines: Iterable[str], kind: ColoringKind = SEMISTRONG, budget: SearchBudget = SURVEY_BUDGET,
               jobs: int = 1) -> Iterator[SurveyRecord]:
    """Yield one record per graph6 line, in input order.

    With ``jobs > 1`` and a non-deterministic budget, graphs are solved on a
    process pool; results are still yielded in input order.
    """
    g6 = iter_graph6_lines(lines)
    if jobs <= 1 or budget.deterministic:
        for line in g6:
            yield _survey_line((line, kind, budget))
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_survey_line, ((line, kind, budget) for line in g6), chunksize=4)


def summarize(records: list[SurveyRecord]) -> dict:
    flag_names = ("exceeds_thm_main", "exceeds_conj_general", "exceeds_conj_subcubic", "exceeds_subcubic_thm")
    violations = {f: [r.graph6 for r in records if r.flags.get(f)] for f in flag_names}
    per_delta: dict[str, int] = {}
    for r in records:
        if r.value is not None:
            key = str(r.max_degree)
            per_delta[key] = max(per_delta.get(key, 0), r.value)
    return {
        "graphs": len(records),
        "solved": sum(r.status == "solved" for r in records),
        "budget_exceeded": sum(r.status == "budget_exceeded" for r in records),
        "violations": violations,
        "max_value_per_delta": dict(sorted(per_delta.items(), key=lambda kv: int(kv[0]))),
    }


def build_report(records: list[SurveyRecord]) -> dict:
    return {"format": REPORT_FORMAT, "records": [r.to_dict() for r in records], "summary": summarize(records)}


def dumps_report(records: list[SurveyRecord]) -> str:
    return json.dumps(build_report(records), indent=2, sort_keys=False) + "\n"
