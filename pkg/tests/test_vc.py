import random

from dynfpt.graph import EdgeOp, Graph, induced_subgraph
from dynfpt.oracles import brute_vc
from dynfpt.solvers import vc_exact
from dynfpt.vc import DynamicVertexCover, vc_query, vc_update

from helpers import random_stream


def covers(g, s):
    return all(u in s or v in s for u, v in g.edges())


def build(n, edges):
    st = DynamicVertexCover(n)
    for u, v in edges:
        vc_update(st, EdgeOp.insert(u, v))
    return st


def test_single_edge():
    st = build(2, [(0, 1)])
    assert covers(st.g, st.x) and 1 <= len(st.x) <= 2


def test_star_and_triangle():
    star = build(5, [(0, i) for i in range(1, 5)])
    assert covers(star.g, star.x) and len(star.x) <= 2
    tri = build(3, [(0, 1), (1, 2), (0, 2)])
    assert len(vc_query(tri)) == 2
    vc_update(tri, EdgeOp.delete(0, 2))
    assert covers(tri.g, tri.x) and len(tri.x) <= 2 and len(vc_query(tri)) == 1


def test_query_examples():
    assert vc_query(DynamicVertexCover(4)) == set()
    c5_edge = build(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 6)])
    assert len(vc_query(c5_edge)) == 4


def test_query_is_read_only():
    st = build(4, [(0, 1), (1, 2), (2, 3)])
    before = st.solution()
    st.query()
    st.query()
    assert st.solution() == before


def test_random_streams():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(2, 12)
        st = DynamicVertexCover(n)
        for op in random_stream(rng, n, 30):
            st.update(op)
            opt = brute_vc(st.g)
            assert covers(st.g, st.x) and len(st.x) <= 2 * opt
            forced, vertices = st.kernel()
            size = len(st.x)
            sub, _ = induced_subgraph(st.g, vertices)
            assert len(vertices) <= size * (size + 1)
            assert sub.m <= size * size
            assert len(forced) + len(vc_exact(sub)) == opt
            assert len(st.query()) == opt


def test_answer_independent_of_endpoint_choice():
    rng = random.Random(4)
    for _ in range(30):
        ops = random_stream(rng, 8, 25)
        a, b = DynamicVertexCover(8), DynamicVertexCover(8)
        for op in ops:
            a.update(op)
            b.update(EdgeOp(op.kind, op.v, op.u))
            assert len(a.query()) == len(b.query())
