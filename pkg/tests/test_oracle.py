import itertools

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from coremine.graph import PartiteGraph, build_graph
from coremine.oracle import bucket_decomposition, fixpoint_peel, fixpoint_peel_partite

from generators import gnp, small_graphs


def test_fixpoint_small_cases(triangle, path4, star5):
    assert fixpoint_peel(triangle, 2).all()
    assert not fixpoint_peel(path4, 2).any()
    assert not fixpoint_peel(star5, 2).any()


def test_fixpoint_partite_k23(k23):
    assert fixpoint_peel_partite(k23, (3, 2)).all()
    assert not fixpoint_peel_partite(k23, (3, 3)).any()


def test_single_partition_agrees_with_plain_oracle():
    for seed in range(20):
        g = gnp(25, 0.15, seed)
        pg = PartiteGraph(g, np.ones(g.vertex_count, dtype=np.int64), 1)
        for k in range(5):
            assert np.array_equal(fixpoint_peel_partite(pg, (k,)), fixpoint_peel(g, k))


def test_coreness_small_cases(k4_pendant):
    k4 = build_graph(itertools.combinations("abcd", 2))
    assert bucket_decomposition(k4).coreness.tolist() == [3, 3, 3, 3]
    path = build_graph([("a", "b"), ("b", "c")])
    assert bucket_decomposition(path).coreness.tolist() == [1, 1, 1]
    cd = bucket_decomposition(k4_pendant)
    assert cd.coreness[k4_pendant.index("p")] == 1
    assert [cd.coreness[k4_pendant.index(x)] for x in "abcd"] == [3, 3, 3, 3]
    assert cd.max_core == 3


def test_empty_decomposition():
    cd = bucket_decomposition(build_graph([]))
    assert cd.max_core == 0 and len(cd.coreness) == 0


@given(small_graphs())
def test_oracles_agree(g):
    cd = bucket_decomposition(g)
    assert (cd.coreness <= g.degrees).all()
    for k in range(9):
        assert np.array_equal(fixpoint_peel(g, k), cd.mask(k))
    # max coreness is the largest k with a non-empty G(k)
    if g.vertex_count:
        assert fixpoint_peel(g, cd.max_core).any()
        assert not fixpoint_peel(g, cd.max_core + 1).any()


@given(small_graphs(), st.randoms())
def test_coreness_relabel_invariant(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    h = build_graph(((perm[u], perm[v]) for u, v in g.edges()), vertices=range(g.vertex_count))
    want = bucket_decomposition(g).coreness
    got = bucket_decomposition(h).coreness
    for v in range(g.vertex_count):
        assert got[h.index(perm[v])] == want[v]


@given(small_graphs())
def test_fixpoint_monotone(g):
    masks = [fixpoint_peel(g, k) for k in range(8)]
    for lo, hi in zip(masks, masks[1:]):
        assert not (hi & ~lo).any()
