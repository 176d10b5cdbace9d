"""Deterministic graph family generators and graph6 encoding.

Vertex labelings, per family:

* ``complete(n)``: ``0..n-1``.
* ``complete_bipartite(m, n)``: parts ``0..m-1`` and ``m..m+n-1``.
* ``path(n)``: ``n`` vertices in order; ``cycle(n)`` closes it.
* ``prism(n)``: outer cycle ``0..n-1``, inner cycle ``n..2n-1``, spokes ``i -- n+i``.
* ``hypercube(n)``: vertex ``i`` is the binary string of ``i``.
* ``kneser(n, k)``: ``k``-subsets of ``{0..n-1}`` in colex order.
* ``subset(n, k, l)``: ``k``-subsets (colex), then ``l``-subsets (colex).
* ``h_gadget()``: two copies of ``K_{2,3}`` (``0,1 | 2,3,4`` and ``5,6 | 7,8,9``)
  joined by ``2--7`` and ``3--8``.
* ``triangle_pendants()``: triangle ``0,1,2`` with pendant edges ``0--3``, ``1--4``, ``2--5``.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidParameters, MalformedGraph6
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def complete(n: int) -> Graph:
    _need(n >= 0, "complete graph needs n >= 0")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 0 and n >= 0, "complete bipartite graph needs m, n >= 0")
    return Graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def star(n: int) -> Graph:
    return complete_bipartite(1, n)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1 vertices")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def prism(n: int) -> Graph:
    _need(n >= 3, "prism needs n >= 3")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def hypercube(n: int) -> Graph:
    _need(n >= 0, "hypercube needs n >= 0")
    return Graph(1 << n, ((v, v | 1 << b) for v in range(1 << n) for b in range(n) if not v >> b & 1))


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1])


def kneser(n: int, k: int) -> Graph:
    _need(1 <= k <= n, "kneser needs 1 <= k <= n")
    verts = [frozenset(s) for s in colex_subsets(n, k)]
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2) if not verts[i] & verts[j]]
    return Graph(len(verts), edges)


def subset(n: int, k: int, l: int) -> Graph:
    _need(0 <= k <= l <= n, "subset graph needs 0 <= k <= l <= n")
    low = [frozenset(s) for s in colex_subsets(n, k)]
    high = [frozenset(s) for s in colex_subsets(n, l)]
    off = len(low)
    edges = [(i, off + j) for i, a in enumerate(low) for j, b in enumerate(high) if a <= b]
    return Graph(off + len(high), edges)


def h_gadget() -> Graph:
    edges = []
    for base in (0, 5):
        edges += [(base + x, base + y) for x in (0, 1) for y in (2, 3, 4)]
    edges += [(2, 7), (3, 8)]
    return Graph(10, edges)


def triangle_pendants() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labelled tree on ``n`` vertices via a Prüfer sequence."""
    _need(n >= 1, "random_tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_graph(n: int, p: float, seed: int | None = None, max_degree: int | None = None) -> Graph:
    """Erdős-Rényi style graph, optionally skipping edges that would exceed ``max_degree``."""
    _need(n >= 0 and 0.0 <= p <= 1.0, "random_graph needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    deg = [0] * n
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p and (max_degree is None or (deg[u] < max_degree and deg[v] < max_degree)):
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise InvalidParameters(message)


# FamilySpec ---------------------------------------------------------------

_FAMILIES: dict[str, tuple[Callable[..., Graph], int]] = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "prism": (prism, 1),
    "hypercube": (hypercube, 1),
    "kneser": (kneser, 2),
    "subset": (subset, 3),
    "h_gadget": (h_gadget, 0),
    "triangle_pendants": (triangle_pendants, 0),
    "random_tree": (random_tree, 1),
}

FAMILY_NAMES = tuple(_FAMILIES)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int | None = None


def generate(spec: FamilySpec | str, *params: int, seed: int | None = None) -> Graph:
    """Build a family member from a :class:`FamilySpec` or ``(name, *params)``.

    >>> generate("kneser", 5, 2).m
    15
    """
    if isinstance(spec, FamilySpec):
        name, params, seed = spec.family, spec.params, spec.seed
    else:
        name = spec
    if name not in _FAMILIES:
        raise InvalidParameters(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")
    fn, arity = _FAMILIES[name]
    if len(params) != arity:
        raise InvalidParameters(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    try:
        params = tuple(int(p) for p in params)
    except (TypeError, ValueError):
        raise InvalidParameters(f"{name} parameters must be integers") from None
    if name == "random_tree":
        return random_tree(params[0], seed=seed)
    return fn(*params)


# graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line. A leading ``>>graph6<<`` header is accepted."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise MalformedGraph6(f"byte outside 63..126 in {line!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for x in data[2:8]:
            n = n << 6 | x
        pos = 8
    else:
        raise MalformedGraph6(f"truncated vertex count in {line!r}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[pos:]
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data bytes for n={n}, got {len(body)}")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)
