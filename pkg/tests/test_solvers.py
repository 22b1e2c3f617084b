import itertools
import random

import pytest

from dynfpt.graph import Graph, MultiGraph, is_cluster_graph
from dynfpt.oracles import brute_cvd, brute_fvs, brute_min_cut, brute_vc
from dynfpt.solvers import (
    FlowNet,
    WeightedGraph,
    chromatic_exact,
    cvd_3approx,
    cvd_exact,
    cvd_exact_weighted,
    disjoint_fvs,
    is_forest,
    max_flow,
    vc_2approx,
    vc_exact,
)

TRIANGLE = [(0, 1), (1, 2), (0, 2)]
BOWTIE = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]   # shared vertex 2


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def sampled_graphs(n, count, seed):
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(count):
        p = rng.random()
        yield Graph.from_edges(n, [e for e in pairs if rng.random() < p])


def covers(g, s):
    return all(u in s or v in s for u, v in g.edges())


def test_vc_examples():
    assert vc_2approx(Graph(4)) == set()
    assert vc_2approx(Graph.from_edges(2, [(0, 1)])) == {0, 1}
    tri = Graph.from_edges(3, TRIANGLE)
    approx = vc_2approx(tri)
    assert covers(tri, approx) and len(approx) <= 4
    assert vc_exact(Graph.from_edges(3, [(0, 1), (1, 2)])) == {1}
    assert len(vc_exact(tri)) == 2
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert vc_exact(c5, 2) is None and len(vc_exact(c5, 3)) == 3


def test_vc_sweep():
    for n in range(1, 7):
        for g in all_graphs(n):
            opt = brute_vc(g)
            approx, exact = vc_2approx(g), vc_exact(g)
            assert covers(g, approx) and covers(g, exact)
            assert len(exact) == opt and len(approx) <= 2 * opt
    for g in sampled_graphs(8, 300, 1):
        opt = brute_vc(g)
        assert len(vc_exact(g)) == opt and len(vc_2approx(g)) <= 2 * opt


def test_cvd_examples():
    assert cvd_3approx(Graph.from_edges(3, TRIANGLE)) == set()
    assert cvd_3approx(Graph.from_edges(3, [(0, 1), (1, 2)])) == {0, 1, 2}
    bowtie = Graph.from_edges(5, BOWTIE)
    approx = cvd_3approx(bowtie)
    assert len(approx) == 3 and 2 in approx
    assert cvd_exact(bowtie) == {2}
    cluster = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert cvd_exact_weighted(WeightedGraph(cluster, [3, 1, 4, 1, 5])) == set()
    p3 = WeightedGraph(Graph.from_edges(3, [(0, 1), (1, 2)]), [5, 1, 5])
    assert cvd_exact_weighted(p3) == {1}


def test_cvd_sweep():
    for n in range(1, 6):
        for g in all_graphs(n):
            opt = brute_cvd(g)
            approx, exact = cvd_3approx(g), cvd_exact(g)
            assert is_cluster_graph(g, approx) and is_cluster_graph(g, exact)
            assert len(exact) == opt and len(approx) <= 3 * opt
    for n in (6, 7):
        for g in sampled_graphs(n, 400, n):
            opt = brute_cvd(g)
            assert len(cvd_exact(g)) == opt and len(cvd_3approx(g)) <= 3 * opt


def test_cvd_budget_and_weights():
    bowtie = Graph.from_edges(5, BOWTIE)
    assert cvd_exact(bowtie, 0) is None
    heavy = WeightedGraph(bowtie, [1, 1, 10, 1, 1])
    sol = cvd_exact_weighted(heavy)
    assert 2 not in sol and sum(heavy.weights[v] for v in sol) == 2


def test_cvd_lexicographic_tiebreak():
    p3 = WeightedGraph(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert cvd_exact_weighted(p3, lexicographic=True) == {0}


def test_disjoint_fvs_examples():
    forest = MultiGraph.from_graph(Graph.from_edges(4, [(0, 1), (1, 2)]))
    assert disjoint_fvs(forest, {0, 1, 2, 3}, 0) == set()
    tri = MultiGraph.from_graph(Graph.from_edges(3, TRIANGLE))
    assert disjoint_fvs(tri, {0, 1}, 3) == {2}
    assert disjoint_fvs(tri, {0, 1, 2}, 3) is None
    double = MultiGraph([0, 1])
    double.add_edge(0, 1, 2)
    assert disjoint_fvs(double, {0}, 1) == {1}
    assert disjoint_fvs(double, {0, 1}, 5) is None


def random_multigraph(rng, n):
    mg = MultiGraph(range(n))
    for a, b in itertools.combinations_with_replacement(range(n), 2):
        if a == b and rng.random() < 0.05:
            mg.add_edge(a, a)
        elif a != b and rng.random() < 0.25:
            mg.add_edge(a, b, rng.randint(1, 3))
    return mg


def test_disjoint_fvs_against_brute():
    rng = random.Random(5)
    for _ in range(400):
        n = rng.randint(1, 8)
        mg = random_multigraph(rng, n)
        s = {v for v in range(n) if rng.random() < 0.3}
        allow = set(range(n)) - s
        opt = brute_fvs(mg, allow)
        got = disjoint_fvs(mg, s, n)
        if opt is None:
            assert got is None
        else:
            assert got is not None and len(got) == opt
            assert not got & s and is_forest(mg, got)
            assert disjoint_fvs(mg, s, opt - 1) is None


def test_max_flow_examples():
    assert max_flow(FlowNet(2, 0, 1)) == 0
    net = FlowNet(3, 0, 2)
    net.add_arc(0, 1, 1)
    net.add_arc(1, 2, 1)
    assert max_flow(net) == 1
    # colours 1, 2 -> classes y_{x} (cap 2, colour 2 only) and y_0 (cap 1)
    net = FlowNet(6, 0, 1)
    c1, c2, yx, y0 = 2, 3, 4, 5
    for c in (c1, c2):
        net.add_arc(0, c, 1)
    net.add_arc(c2, yx, 1)
    net.add_arc(c1, y0, 1)
    net.add_arc(c2, y0, 1)
    net.add_arc(yx, 1, 2)
    net.add_arc(y0, 1, 1)
    assert max_flow(net) == 2


def test_max_flow_equals_min_cut():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(2, 10)
        arcs = [
            (u, v, rng.randint(1, 4))
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < 0.3
        ]
        net = FlowNet(n, 0, n - 1)
        for u, v, c in arcs:
            net.add_arc(u, v, c)
        assert max_flow(net) == brute_min_cut(n, 0, n - 1, arcs)


def test_flow_net_rejects_equal_terminals():
    with pytest.raises(ValueError):
        FlowNet(2, 0, 0)


def test_chromatic_exact_small():
    assert chromatic_exact(Graph(0)) == 0
    assert chromatic_exact(Graph(3)) == 1
    assert chromatic_exact(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])) == 3
