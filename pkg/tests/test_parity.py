from math import ceil

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperspec import (
    Bipartition,
    DimensionMismatch,
    OddUniformity,
    TooLarge,
    brute_force_odd_bipartite,
    complete_hypergraph,
    find_odd_bipartition,
    hyperpath,
    new_hypergraph,
    odd_transversal_subhypergraph,
    verify_odd_bipartition,
)
from hyperspec.parity import gf2_solve
from conftest import random_connected


def test_gf2_solve_small():
    # x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
    y = gf2_solve([0b011, 0b110, 0b101], [1, 0, 1], 3)
    assert y is not None
    assert (y[0] ^ y[1], y[1] ^ y[2], y[0] ^ y[2]) == (1, 0, 1)
    assert gf2_solve([0b011, 0b110, 0b101], [1, 1, 1], 3) is None


def test_k5_is_not_odd_bipartite():
    # each vertex lies in 4 edges, so summing all 5 parity equations gives 0 = 1
    assert find_odd_bipartition(complete_hypergraph(5, 4)) is None
    assert not brute_force_odd_bipartite(complete_hypergraph(5, 4))


def test_hypertree_is_odd_bipartite():
    P = hyperpath(3, 4)
    b = find_odd_bipartition(P)
    assert b is not None and verify_odd_bipartition(P, b)
    assert set(b.to_string()) <= {"0", "1"}


def test_forced_vertex():
    P = hyperpath(2, 4)
    for v in range(P.n):
        b = find_odd_bipartition(P, force_in_v1=v)
        assert b.membership[v] == 1 and verify_odd_bipartition(P, b)


def test_errors():
    with pytest.raises(OddUniformity):
        find_odd_bipartition(complete_hypergraph(4, 3))
    with pytest.raises(DimensionMismatch):
        verify_odd_bipartition(hyperpath(1, 4), Bipartition.from_string("01"))
    with pytest.raises(TooLarge):
        brute_force_odd_bipartite(hyperpath(8, 4))  # 25 vertices


def test_bipartition_helpers():
    b = Bipartition.from_set(5, {0, 3})
    assert b.to_string() == "10010"
    assert b.V1 == {0, 3} and b.V2 == {1, 2, 4}
    assert b.complement().to_string() == "01101"
    assert Bipartition.from_string("10010") == b


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_detector_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.choice([2, 4, 6]))
    n = int(rng.integers(k, 13))
    G = random_connected(rng, k, n, int(rng.integers(0, n)))
    b = find_odd_bipartition(G)
    assert (b is not None) == brute_force_odd_bipartite(G)
    if b is not None:
        assert verify_odd_bipartition(G, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_odd_transversal_keeps_half(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.choice([2, 4, 6]))
    n = int(rng.integers(k, 15))
    G = random_connected(rng, k, n, int(rng.integers(0, 2 * n)))
    res = odd_transversal_subhypergraph(G)
    assert res.count >= ceil(G.num_edges / 2)
    T = res.partition.membership
    for j in res.kept_edges:
        assert sum(T[v] for v in G.edges[j]) % 2 == 1
    sub = G.sub_hypergraph(res.kept_edges)
    assert verify_odd_bipartition(sub, res.partition)


def test_odd_transversal_deterministic():
    G = new_hypergraph(4, 6, [(0, 1, 2, 3), (2, 3, 4, 5), (0, 1, 4, 5), (0, 2, 4, 5)])
    a, b = odd_transversal_subhypergraph(G), odd_transversal_subhypergraph(G)
    assert a == b
