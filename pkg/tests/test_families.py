import random
from math import comb

import networkx as nx
import pytest
from hypothesis import given

from oracles import to_nx
from semistrong.errors import InvalidParameters, MalformedGraph6
from semistrong.families import (
    FamilySpec,
    complete,
    emit_graph6,
    generate,
    h_gadget,
    hypercube,
    kneser,
    parse_graph6,
    prism,
    random_graph,
    random_tree,
    subset,
)
from semistrong.graph import Graph, girth, is_bipartite, is_connected, is_tree
from strategies import graphs


def test_petersen_from_kneser():
    g = generate(FamilySpec("kneser", (5, 2)))
    assert (g.n, g.m) == (10, 15)
    assert set(g.degrees()) == {3}
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_hypercube_q3():
    g = generate("hypercube", 3)
    assert (g.n, g.m) == (8, 12)


def test_prism5():
    g = prism(5)
    assert (g.n, g.m) == (10, 15)
    assert set(g.degrees()) == {3}
    assert nx.is_isomorphic(to_nx(g), nx.circular_ladder_graph(5))


def test_subset_graph_is_c6():
    assert nx.is_isomorphic(to_nx(subset(3, 1, 2)), nx.cycle_graph(6))


def test_h_gadget():
    g = h_gadget()
    assert (g.n, g.m, g.max_degree) == (10, 14, 3)
    assert sorted(g.degrees()).count(2) == 2
    assert is_connected(g)


@pytest.mark.parametrize("n", range(1, 8))
def test_kneser_regular(n):
    for k in range(1, n + 1):
        g = kneser(n, k)
        assert g.n == comb(n, k)
        assert set(g.degrees()) == {comb(n - k, k)}


@pytest.mark.parametrize("n", range(0, 6))
def test_subset_graph_bipartite_degrees(n):
    for k in range(n + 1):
        for l in range(k, n + 1):
            g = subset(n, k, l)
            assert is_bipartite(g)
            low = comb(n, k)
            assert g.n == low + comb(n, l)
            assert all(g.degree(v) == comb(n - k, l - k) for v in range(low))


@pytest.mark.parametrize("n", range(0, 6))
def test_hypercube_regular_bipartite(n):
    g = hypercube(n)
    assert g.n == 2 ** n
    assert set(g.degrees()) <= {n}
    assert is_bipartite(g)


@pytest.mark.parametrize("name,params", [
    ("kneser", (3, 0)), ("subset", (3, 2, 1)), ("cycle", (2,)), ("prism", (2,)), ("path", (0,)),
    ("kneser", (5,)), ("nonsense", ()),
])
def test_invalid_parameters(name, params):
    with pytest.raises(InvalidParameters):
        generate(name, *params)


class TestRandomTree:
    def test_small(self):
        assert random_tree(1, seed=0) == Graph(1)
        assert random_tree(2, seed=0) == complete(2)

    def test_structure_and_determinism(self):
        t = random_tree(8, seed=42)
        assert t.m == 7 and is_tree(t)
        assert random_tree(8, seed=42) == t

    def test_prufer_uniformity_on_four_vertices(self):
        # 4^2 = 16 labelled trees on 4 vertices; each Prüfer sequence gives one
        seen = {random_tree(4, seed=s).edges for s in range(2000)}
        assert len(seen) == 16


class TestGraph6:
    def test_k2(self):
        assert parse_graph6("A_") == complete(2)
        assert emit_graph6(complete(2)) == "A_"

    def test_k4(self):
        assert parse_graph6("C~") == complete(4)

    def test_single_vertex(self):
        assert emit_graph6(Graph(1)) == "@"
        assert parse_graph6("@") == Graph(1)

    def test_empty_five_vertex_graph(self):
        # ceil(C(5,2) / 6) = 2 data bytes, so "D??" is well formed
        assert parse_graph6("D??") == Graph(5)

    @pytest.mark.parametrize("bad", ["D?", "D???", "A", "A`", "C~~", "", "A\x7f", "~??"])
    def test_malformed(self, bad):
        with pytest.raises(MalformedGraph6):
            parse_graph6(bad)

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<C~\n") == complete(4)

    def test_large_vertex_count(self):
        g = random_graph(70, 0.05, seed=1)
        s = emit_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g

    @given(graphs(max_n=14))
    def test_agrees_with_networkx(self, g):
        ours = emit_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert sorted(map(tuple, map(sorted, back.edges))) == list(g.edges)

    def test_round_trip_families_and_random(self):
        fams = [complete(5), prism(5), hypercube(4), kneser(5, 2), subset(4, 1, 3), h_gadget()]
        rng = random.Random(7)
        rand = [random_graph(rng.randint(0, 20), rng.random(), seed=s) for s in range(1000)]
        for g in fams + rand:
            assert parse_graph6(emit_graph6(g)) == g


def test_random_graph_degree_cap():
    for s in range(50):
        g = random_graph(20, 0.5, seed=s, max_degree=4)
        assert g.max_degree <= 4


def test_girth_of_generated_families():
    assert girth(prism(5)) == 4
    assert girth(kneser(5, 2)) == 5
