import numpy as np
import pytest

from vertexmatch.graph import NONE, Graph, Matching, WeightAssignment
from vertexmatch.mem import EdgeWeightedGraph, mvm_to_mem
from vertexmatch.oracle import (
    OracleLimitError,
    all_matchings,
    exact_weight,
    has_augmenting_path,
    max_cardinality,
    naive_lexmax_vector,
    oracle_mem,
    oracle_mvm,
    stats,
    verify_matching,
    weight_vector,
)
from _corpus import gnp, tied_weights


def test_single_edge():
    assert oracle_mvm(Graph.from_pairs(2, [(0, 1)]), WeightAssignment.of([2, 3])).vector == (3, 2)


def test_triangle():
    g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
    assert oracle_mvm(g, WeightAssignment.of([5, 4, 3])).vector == (5, 4)


def test_star():
    g = Graph.from_pairs(4, [(0, 1), (0, 2), (0, 3)])
    res = oracle_mvm(g, WeightAssignment.of([1, 9, 8, 7]))
    assert res.vector == (9, 1) and res.max_cardinality == 1 and res.max_weight == 10


def test_limit():
    g = Graph.from_pairs(17, [])
    with pytest.raises(OracleLimitError):
        oracle_mvm(g, WeightAssignment.of([1] * 17))
    assert oracle_mvm(g, WeightAssignment.of([1] * 17), limit=17).vector == ()
    with pytest.raises(OracleLimitError):
        oracle_mem(mvm_to_mem(g, WeightAssignment.of([1] * 17)))


def test_oracle_of_the_oracle():
    rng = np.random.default_rng(1)
    for i in range(300):
        n = int(rng.integers(0, 9))
        g = gnp(n, float(rng.uniform(0.1, 0.9)), rng)
        if i % 3 == 0:
            w = tied_weights(n, rng, 3)
        elif i % 3 == 1:
            w = WeightAssignment.of(rng.integers(1, 1001, size=n))
        else:
            w = WeightAssignment("real", rng.uniform(1.0, 1.3, size=n))
        res = oracle_mvm(g, w)
        assert verify_matching(g, res.matching)
        assert res.vector == weight_vector(res.matching, w)
        assert res.vector == naive_lexmax_vector(g, w)
        assert res.max_cardinality == max(m.cardinality for m in all_matchings(g))


def test_all_matchings_counts():
    # matchings of a 4-cycle: empty, four single edges, two perfect
    g = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert sum(1 for _ in all_matchings(g)) == 7


def test_oracle_mem_examples():
    g = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    assert oracle_mem(EdgeWeightedGraph(g, np.array([4, 6, 4])))[1] == 8
    assert oracle_mem(EdgeWeightedGraph(Graph.from_pairs(3, []), np.array([], dtype=np.int64)))[1] == 0


def test_oracle_mem_matches_naive():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(0, 8))
        g = gnp(n, 0.6, rng)
        eg = EdgeWeightedGraph(g, rng.integers(0, 30, size=g.edge_count))
        m, value = oracle_mem(eg)
        assert verify_matching(g, m) and eg.matching_weight(m) == value
        assert value == max(eg.matching_weight(x) for x in all_matchings(g))


def test_has_augmenting_path_examples():
    c4 = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not has_augmenting_path(c4, Matching.from_pairs(4, [(0, 1), (2, 3)]))
    assert has_augmenting_path(Graph.from_pairs(2, [(0, 1)]), Matching.empty(2))


def test_has_augmenting_path_matches_cardinality():
    rng = np.random.default_rng(3)
    for _ in range(400):
        n = int(rng.integers(1, 13))
        g = gnp(n, float(rng.uniform(0.1, 0.8)), rng)
        mate = [NONE] * n
        for k in rng.permutation(g.edge_count).tolist():
            u, v = g.edges[k].tolist()
            if mate[u] == NONE and mate[v] == NONE:
                mate[u], mate[v] = v, u
        m = Matching(mate)
        assert has_augmenting_path(g, m) == (m.cardinality < max_cardinality(g))


def test_verify_matching():
    g = Graph.from_pairs(3, [(0, 1), (1, 2)])
    assert verify_matching(g, Matching([1, 0, NONE]))
    assert not verify_matching(g, Matching([1, 2, NONE]))
    assert not verify_matching(g, Matching.from_pairs(3, [(0, 2)]))
    assert not verify_matching(g, Matching([0, NONE, NONE]))
    assert not verify_matching(g, Matching([1, 0]))


def test_stats_gaps():
    w = WeightAssignment.of([50, 44, 6, 0])
    m = Matching.from_pairs(4, [(0, 1)])
    s = stats(m, w, 100)
    assert (s.weight, s.cardinality, s.weight_vector, s.gap_percent) == (94, 1, (50, 44), 6.0)
    assert stats(Matching.from_pairs(4, [(0, 1), (2, 3)]), w, 100).gap_percent == 0.0
    assert stats(Matching.empty(4), w, 100).gap_percent == 100.0
    assert stats(m, w).gap_percent is None
    assert stats(m, w, 0).gap_percent is None
    assert stats(Matching.empty(4), w, 0).gap_percent == 0.0


def test_exact_weight_real_mode():
    w = WeightAssignment("real", np.array([0.1, 0.2, 0.3]))
    m = Matching.from_pairs(3, [(0, 1)])
    opt = exact_weight(m, w)
    assert stats(m, w, opt).gap_percent == 0.0
