import random

import pytest

from oracles import line_graph_distances, load_corpus, min_partition, nx_class_ok, relaxed_chi_bruteforce, sdr_bruteforce, \
    to_nx, valid_subsets
from semistrong.coloring import EdgeColoring, verify
from semistrong.errors import BudgetExceeded
from semistrong.families import complete_bipartite, cycle, hypercube, parse_graph6, path, prism, random_graph
from semistrong.graph import Graph
from semistrong.kinds import PROPER, SEMISTRONG, STRONG, degenerate_classes, relaxed
from semistrong.solver import (
    SearchBudget,
    _Search,
    chromatic_index,
    complete_by_distinct_representatives,
    distinct_representatives,
    feasible,
    lower_bound,
)

CLASS_KINDS = [
    (PROPER, "plain", None),
    (STRONG, "induced", None),
    (SEMISTRONG, "semistrong", None),
    (degenerate_classes(1), "degenerate", 1),
    (degenerate_classes(2), "degenerate", 2),
]


class TestFeasible:
    def test_k33_needs_nine(self):
        assert feasible(complete_bipartite(3, 3), 8, SEMISTRONG) is None

    def test_prism5_boundary(self):
        g = prism(5)
        assert feasible(g, 7, SEMISTRONG) is None
        c = feasible(g, 8, SEMISTRONG)
        assert c is not None and verify(g, c, SEMISTRONG)

    def test_rainbow_palette_always_works(self):
        for s in range(30):
            g = random_graph(8, 0.5, seed=s)
            if g.m:
                for kind, _, _ in CLASS_KINDS:
                    assert feasible(g, g.m, kind) is not None

    def test_monotone_in_k(self):
        for s in range(40):
            g = random_graph(7, 0.5, seed=s)
            if not g.m:
                continue
            answers = [feasible(g, k, SEMISTRONG) is not None for k in range(1, g.m + 1)]
            first = answers.index(True)
            assert all(answers[first:])

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            feasible(path(3), 0, PROPER)

    def test_budget_is_not_infeasibility(self):
        with pytest.raises(BudgetExceeded) as info:
            feasible(hypercube(4), 7, SEMISTRONG, SearchBudget(max_nodes=50))
        assert info.value.nodes > 50

    @pytest.mark.parametrize("order", ["static", "dynamic"])
    @pytest.mark.parametrize("symmetry", [True, False])
    def test_options_agree(self, order, symmetry):
        for s in range(25):
            g = random_graph(7, 0.45, seed=s)
            if not g.m:
                continue
            ref = chromatic_index(g, SEMISTRONG).value
            got = chromatic_index(g, SEMISTRONG, symmetry_breaking=symmetry, order=order).value
            assert got == ref


class TestDistinctRepresentatives:
    @pytest.mark.parametrize("sets,ok", [
        ([{1, 2}, {1, 2}, {1, 2}], False),
        ([{1}, {1, 2}, {2, 3}], True),
        ([], True),
        ([set()], False),
        ([{1, 2}, {2, 3}, {1, 3}], True),
        ([{1}, {1}], False),
    ])
    def test_examples(self, sets, ok):
        pick = distinct_representatives(sets)
        assert (pick is not None) == ok == sdr_bruteforce(sets)
        if pick is not None:
            assert len(set(pick)) == len(pick)
            assert all(x in s for x, s in zip(pick, sets))

    def test_random_against_bruteforce(self):
        rng = random.Random(0)
        for _ in range(500):
            sets = [set(rng.sample(range(1, 6), rng.randint(0, 3))) for _ in range(rng.randint(0, 5))]
            assert (distinct_representatives(sets) is not None) == sdr_bruteforce(sets)

    def test_completion(self):
        g = path(4)
        partial = EdgeColoring(3, (None, 2, None))
        done = complete_by_distinct_representatives(g, partial, [(0, 1), (2, 3)], [{1, 3}, {1}])
        assert done.colors == (3, 2, 1)
        assert complete_by_distinct_representatives(g, partial, [(0, 1), (2, 3)], [{1}, {1}]) is None


def _partial_ok_oracle(g, h, colors, name, r):
    by = {}
    for e, c in zip(g.edges, colors):
        if c:
            by.setdefault(c, []).append(e)
    return all(nx_class_ok(h, es, name, r) for es in by.values())


def test_admissibility_is_exact_on_partial_colorings():
    # a color is refused exactly when the enlarged partial coloring already has a bad class;
    # classes are hereditary, so refusing never discards a completable branch
    for s in range(120):
        rng = random.Random(s)
        g = random_graph(rng.randint(3, 8), 0.5, seed=s)
        if g.m < 2:
            continue
        h = to_nx(g)
        k = rng.randint(2, 5)
        for kind, name, r in CLASS_KINDS:
            search = _Search(g, k, kind, SearchBudget())
            order = list(range(g.m))
            rng.shuffle(order)
            for e in order[:-1]:
                ok = [c for c in range(1, k + 1) if search.admissible(e, c)]
                for c in range(1, k + 1):
                    trial = list(search.color)
                    trial[e] = c
                    assert (c in ok) == _partial_ok_oracle(g, h, trial, name, r)
                if not ok:
                    break
                search.assign(e, rng.choice(ok))


def test_relaxed_admissibility_is_exact():
    for s in range(80):
        rng = random.Random(s)
        g = random_graph(rng.randint(3, 7), 0.5, seed=s)
        if g.m < 2:
            continue
        dist = line_graph_distances(g)
        for st in [(0, 1), (1, 0), (1, 1)]:
            search = _Search(g, 3, relaxed(*st), SearchBudget())
            for e in range(g.m):
                for c in range(1, 4):
                    trial = list(search.color)
                    trial[e] = c
                    expect = True
                    col = dict(zip(g.edges, trial))
                    for f in g.edges:
                        if not col[f]:
                            continue
                        near = sum(1 for x, d in dist[f].items() if d == 1 and col[x] == col[f])
                        far = sum(1 for x, d in dist[f].items() if d == 2 and col[x] == col[f])
                        expect &= near <= st[0] and far <= st[1]
                    assert search.admissible(e, c) == expect
                ok = [c for c in range(1, 4) if search.admissible(e, c)]
                if not ok:
                    break
                search.assign(e, rng.choice(ok))


def test_exact_values_against_partition_oracle():
    corpus = [parse_graph6(x) for x in load_corpus("connected_m1-8.g6")]
    rng = random.Random(1)
    for g in rng.sample(corpus, 80):
        for kind, name, r in CLASS_KINDS:
            res = chromatic_index(g, kind)
            assert res.value == min_partition(valid_subsets(g, name, r), g.m)
            assert verify(g, res.witness, kind)
            assert res.witness.num_colors == res.value


def test_relaxed_chromatic_index_against_bruteforce():
    for s in range(30):
        rng = random.Random(s)
        g = random_graph(rng.randint(3, 6), 0.5, seed=s)
        if not g.m or g.m > 5:
            continue
        for st in [(0, 0), (0, 1), (1, 1), (2, 0)]:
            assert chromatic_index(g, relaxed(*st)).value == relaxed_chi_bruteforce(g, *st)


class TestChromaticIndex:
    def test_c7_needs_four(self):
        # exceeds Delta^2 - 1 = 3
        g = cycle(7)
        assert chromatic_index(g, SEMISTRONG).value == 4 == min_partition(valid_subsets(g, "semistrong"), 7)

    def test_components_merged(self):
        g = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 8)])
        res = chromatic_index(g, SEMISTRONG)
        assert res.value == 4
        assert verify(g, res.witness, SEMISTRONG)
        assert len(res.witness.colors) == g.m

    def test_edgeless(self):
        res = chromatic_index(Graph(4), SEMISTRONG)
        assert res.value == 0 and res.witness.colors == ()

    def test_lower_bound_method(self):
        assert chromatic_index(prism(5), SEMISTRONG).lower_bound_method == "exhausted"
        # the conflict clique already has nine edges
        assert chromatic_index(complete_bipartite(3, 3), SEMISTRONG).lower_bound_method == "trivial"

    def test_lower_bound_never_exceeds_value(self):
        for s in range(60):
            g = random_graph(8, 0.4, seed=s)
            for kind, _, _ in CLASS_KINDS:
                assert lower_bound(g, kind) <= chromatic_index(g, kind).value

    def test_budget_covers_whole_call(self):
        with pytest.raises(BudgetExceeded):
            chromatic_index(hypercube(4), SEMISTRONG, SearchBudget(max_nodes=1000))
