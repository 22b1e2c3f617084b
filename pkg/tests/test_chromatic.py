import itertools
import random

import pytest

from dynfpt.chromatic import (
    DynamicChromaticNumber,
    Partition,
    chi_value,
    enumerate_partitions,
    proper_colorings,
)
from dynfpt.errors import CapExceeded, StaleLabel
from dynfpt.graph import EdgeOp, Graph
from dynfpt.oracles import brute_chromatic, count_partitions

from helpers import random_stream


@pytest.mark.parametrize("n", range(9))
def test_partition_counts(n):
    parts = list(enumerate_partitions(range(n)))
    assert len(parts) == count_partitions(n)
    assert len({p.blocks for p in parts}) == len(parts)


def test_partition_examples():
    assert [p.blocks for p in enumerate_partitions([])] == [()]
    assert len(list(enumerate_partitions([4, 7, 9]))) == 5
    assert len(list(enumerate_partitions(range(4)))) == 15
    with pytest.raises(CapExceeded):
        next(enumerate_partitions(range(13)))


def test_restrict():
    p = Partition((1, 2, 3, 4), (0, 1, 0, 2))
    assert p.restrict([2, 4]) == Partition((2, 4), (0, 1))
    assert p.groups() == [[1, 3], [2], [4]]


def test_proper_colorings_of_triangle():
    tri = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert [p.blocks for p in proper_colorings(tri, [0, 1, 2])] == [(0, 1, 2)]


def test_chi_examples():
    assert chi_value({(): 4}, Partition((), ())) == 4
    x, y = 10, 11
    assert chi_value({(x,): 2, (): 1}, Partition((x,), (0,))) == 3
    assert chi_value({(): 1}, Partition((x, y), (0, 1))) == 2


def test_compute_chi_rejects_stale_input():
    st = DynamicChromaticNumber(3)
    with pytest.raises(StaleLabel):
        st.compute_chi(99, Partition((), ()))
    label = st.label_of[0]
    with pytest.raises(StaleLabel):
        st.compute_chi(label, Partition((2,), (0,)))


def test_degenerate_sizes():
    assert DynamicChromaticNumber(0).chromatic_number() == 0
    assert DynamicChromaticNumber(4).chromatic_number() == 1


def build(n, edges, debug=True):
    st = DynamicChromaticNumber(n, debug=debug)
    answers = [st.chromatic_number()]
    for u, v in edges:
        st.update(EdgeOp.insert(u, v))
        answers.append(st.chromatic_number())
    return st, answers


def test_update_examples():
    _, answers = build(3, [(0, 1), (1, 2), (0, 2)])
    assert answers == [1, 2, 2, 3]
    _, answers = build(5, [(i, (i + 1) % 5) for i in range(5)])
    assert answers[-1] == 3
    k4, answers = build(4, itertools.combinations(range(4), 2))
    assert answers[-1] == 4
    k4.update(EdgeOp.delete(0, 1))
    assert k4.chromatic_number() == 3


def test_lambda_balance():
    rng = random.Random(6)
    st = DynamicChromaticNumber(8, debug=True)
    for op in random_stream(rng, 8, 40):
        st.update(op)
        for key, bucket in st.lam.items():
            live = sum(1 for l in st.clusters if st.x_side(l) == key)
            assert all(len(ms) == live for ms in bucket.values())


def test_random_streams():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 9)
        st = DynamicChromaticNumber(n, debug=True)
        for op in random_stream(rng, n, 30):
            st.update(op)
            assert st.chromatic_number() == brute_chromatic(st.g)
