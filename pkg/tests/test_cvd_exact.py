import itertools
import random

import pytest

from dynfpt.cvd_exact import ClassNode, DynamicClusterDeletionExact
from dynfpt.errors import AssumptionViolated
from dynfpt.graph import EdgeOp, Graph
from dynfpt.oracles import brute_cvd

from helpers import random_stream


def rebuilt(n, edges, x):
    return DynamicClusterDeletionExact.rebuild(Graph.from_edges(n, edges), x)


def test_move_lone_cluster_vertex():
    st = rebuilt(2, [(0, 1)], set())
    st.move_to_x(0)
    label = st.label_of[1]
    assert st.x == {0} and st.clusters[label] == {1}
    assert st.classes[label] == {(0,): {1}}
    st.check_invariants()


def test_move_singleton_retires_label():
    st = rebuilt(2, [], set())
    label = st.label_of[1]
    st.move_to_x(1)
    assert label not in st.clusters and label not in st.classes


def test_move_renames_keys():
    a, b, c, x = 0, 1, 2, 3
    st = rebuilt(4, [(a, b), (b, c), (a, c), (x, a)], {x})
    label = st.label_of[a]
    assert st.classes[label] == {(x,): {a}, (): {b, c}}
    st.move_to_x(a)
    assert st.classes[label] == {(a,): {b, c}}
    assert label not in st.touching[x]
    st.check_invariants()


def test_remove_examples():
    st = rebuilt(1, [], {0})
    st.remove_from_x(0)
    label = st.label_of[0]
    assert st.classes[label] == {(): {0}}
    two = rebuilt(3, [(0, 1), (0, 2)], {0})
    with pytest.raises(AssumptionViolated):
        two.remove_from_x(0)


def test_move_then_remove_restores():
    rng = random.Random(2)
    for _ in range(50):
        g = Graph.from_edges(
            8, [e for e in itertools.combinations(range(8), 2) if rng.random() < 0.4]
        )
        st = DynamicClusterDeletionExact(8)
        for u, v in g.edges():
            st.update(EdgeOp.insert(u, v))
        before = st.canonical()
        for v in sorted(set(range(8)) - st.x):
            st.move_to_x(v)
            st.remove_from_x(v)
            assert st.canonical() == before


def test_compression_instance_examples():
    empty = rebuilt(3, [(0, 1)], set())
    inst = empty.compression_instance()
    assert inst.weighted.graph.n == 0
    # x touches two singleton clusters: 2 > |X| so x is kept
    star = rebuilt(3, [(0, 1), (0, 2)], {0})
    inst = star.compression_instance()
    assert inst.weighted.graph.n == 0 and inst.kept == {0}
    # x touches cluster {a, b} through a only
    a, b, x = 0, 1, 2
    st = rebuilt(3, [(a, b), (x, a)], {x})
    inst = st.compression_instance()
    label = st.label_of[a]
    assert inst.nodes == [x, ClassNode(label, ()), ClassNode(label, (x,))]
    assert inst.weighted.weights == [1, 1, 1]
    assert sorted(inst.weighted.graph.edges()) == [(0, 2), (1, 2)]


def test_update_examples():
    st = DynamicClusterDeletionExact(3, debug=True)
    sizes = []
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        st.update(EdgeOp.insert(u, v))
        sizes.append(len(st.x))
    # the middle prefix is a P3
    assert sizes == [0, 1, 0]
    p3 = DynamicClusterDeletionExact(3, debug=True)
    p3.update(EdgeOp.insert(0, 1))
    p3.update(EdgeOp.insert(1, 2))
    assert len(p3.solution()) == 1 and p3.solution() == p3.solution()
    assert DynamicClusterDeletionExact(4).solution() == set()


def test_bowtie_tracks_oracle():
    st = DynamicClusterDeletionExact(5, debug=True)
    ops = [EdgeOp.insert(u, v) for u, v in [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]]
    ops.append(EdgeOp.delete(0, 2))
    for op in ops:
        st.update(op)
        assert len(st.x) == brute_cvd(st.g)


def test_random_streams():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(3, 10)
        st = DynamicClusterDeletionExact(n, debug=True)
        for op in random_stream(rng, n, 30):
            st.update(op)
            assert len(st.x) == brute_cvd(st.g)
            size = len(st.x)
            inst = st.compression_instance()
            assert inst.weighted.graph.n <= size + 2 ** size * size * size
