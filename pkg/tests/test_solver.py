import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import minimize_scalar

from hyperspec import (
    NotConnected,
    OddUniformity,
    SolverConfig,
    WrongUniformity,
    coalesce,
    complete_hypergraph,
    hyperpath,
    new_hypergraph,
    solve_least_eigen,
)
from hyperspec import tensor
from hyperspec.solver import descent_history, matrix_oracle_k2, sampling_oracle
from conftest import random_connected, random_graph

# least eigenvalues of K5^(4) with a hyperpath of m edges hung at a vertex;
# solver output, cross-checked against sampling_oracle for m <= 2
K5_PATH_LAMBDA = {
    0: 1.4939872392183373,
    1: 0.34642481863269126,
    2: 0.13218163195021004,
    3: 0.06765720361045857,
    4: 0.04089973609790709,
    5: 0.027352208062200845,
    6: 0.019567081419139543,
}


def k5_symmetric_minimum():
    # x = (a, a, a, a, b) with 4a^4 + b^4 = 1, a >= 0 >= b:
    # q = 4 + 4a^4 + 16 a^3 b; write s = 4a^4
    def q(s):
        return 4 + s - 16 * (s / 4) ** 0.75 * (1 - s) ** 0.25

    return minimize_scalar(q, bounds=(0, 1), method="bounded", options={"xatol": 1e-14}).fun


def test_k5_against_symmetric_reduction():
    r = solve_least_eigen(complete_hypergraph(5, 4))
    assert r.converged
    assert r.lam == pytest.approx(k5_symmetric_minimum(), abs=1e-8)
    assert r.lam == pytest.approx(K5_PATH_LAMBDA[0], abs=1e-10)
    # four equal entries and one of opposite sign
    x = np.sort(r.x)
    assert x[0] < 0 < x[1]
    np.testing.assert_allclose(x[1:], x[1], atol=1e-8)


@pytest.mark.parametrize("m", sorted(K5_PATH_LAMBDA))
def test_k5_path_frozen(m):
    G = coalesce(complete_hypergraph(5, 4), 0, hyperpath(m, 4), 0).graph
    r = solve_least_eigen(G)
    assert r.converged and r.residual < 1e-8
    assert r.lam == pytest.approx(K5_PATH_LAMBDA[m], abs=1e-8)


@pytest.mark.parametrize("m", [1, 2])
def test_k5_path_against_sampling_oracle(m):
    G = coalesce(complete_hypergraph(5, 4), 0, hyperpath(m, 4), 0).graph
    assert sampling_oracle(G, polish=16) == pytest.approx(K5_PATH_LAMBDA[m], abs=1e-8)


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_against_sampling_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(4, 10))
    G = random_connected(rng, 4, n, int(rng.integers(0, n)))
    r = solve_least_eigen(G)
    assert r.lam == pytest.approx(sampling_oracle(G, polish=16), abs=1e-8)


def test_triangle():
    G = new_hypergraph(2, 3, [(0, 1), (1, 2), (0, 2)])
    assert solve_least_eigen(G).lam == pytest.approx(1.0, abs=1e-9)


def test_small_graphs_closed_form():
    # D + A of the path on 3 vertices has spectrum {0, 1, 3}
    P3 = new_hypergraph(2, 3, [(0, 1), (1, 2)])
    assert abs(solve_least_eigen(P3).lam) < 1e-12
    C5 = new_hypergraph(2, 5, [(i, (i + 1) % 5) for i in range(5)])
    assert solve_least_eigen(C5).lam == pytest.approx(2 - 2 * np.cos(np.pi / 5), abs=1e-9)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_graphs_match_matrix(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 9))
    G = random_graph(rng, n, int(rng.integers(0, n)))
    assert solve_least_eigen(G).lam == pytest.approx(matrix_oracle_k2(G), abs=1e-8)


def test_matrix_oracle_needs_graph():
    with pytest.raises(WrongUniformity):
        matrix_oracle_k2(complete_hypergraph(5, 4))


def test_input_errors():
    with pytest.raises(OddUniformity):
        solve_least_eigen(complete_hypergraph(4, 3))
    with pytest.raises(NotConnected):
        solve_least_eigen(new_hypergraph(4, 8, [(0, 1, 2, 3), (4, 5, 6, 7)]))


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(restarts=0)
    with pytest.raises(ValueError):
        SolverConfig(seed_strategy="lucky")
    with pytest.raises(ValueError):
        SolverConfig(armijo_shrink=1.0)


def test_descent_is_monotone():
    G = coalesce(complete_hypergraph(5, 4), 0, hyperpath(3, 4), 0).graph
    x0 = np.random.default_rng(5).standard_normal(G.n)
    hist = descent_history(G, x0)
    assert len(hist) > 10
    assert all(b <= a + 1e-14 for a, b in zip(hist, hist[1:]))


def test_reproducible():
    G = coalesce(complete_hypergraph(5, 4), 2, hyperpath(2, 4), 0).graph
    a, b = solve_least_eigen(G), solve_least_eigen(G)
    assert a.lam == b.lam and np.array_equal(a.x, b.x)
    assert a.to_dict() == b.to_dict()


def test_relabel_invariance():
    G = coalesce(complete_hypergraph(5, 4), 1, hyperpath(2, 4), 0).graph
    perm = np.random.default_rng(2).permutation(G.n).tolist()
    assert solve_least_eigen(G.relabel(perm)).lam == pytest.approx(solve_least_eigen(G).lam, abs=1e-9)


@pytest.mark.parametrize("strategy", ["random", "parity-patterns", "mixed"])
def test_seed_strategies(strategy):
    G = coalesce(complete_hypergraph(5, 4), 0, hyperpath(2, 4), 0).graph
    r = solve_least_eigen(G, SolverConfig(seed_strategy=strategy))
    assert r.lam == pytest.approx(K5_PATH_LAMBDA[2], abs=1e-8)


def test_pure_python_backend_agrees():
    G = coalesce(complete_hypergraph(5, 4), 0, hyperpath(1, 4), 0).graph
    prev = tensor.set_backend("python")
    try:
        r = solve_least_eigen(G, SolverConfig(restarts=8))
    finally:
        tensor.set_backend(prev)
    assert r.lam == pytest.approx(K5_PATH_LAMBDA[1], abs=1e-9)


def test_result_is_eigenpair():
    G = complete_hypergraph(6, 4)
    r = solve_least_eigen(G)
    assert tensor.k_norm(r.x, 4) == pytest.approx(1.0)
    assert tensor.residual(G, r.lam, r.x) < 1e-8
    assert tensor.q_form(G, r.x) == pytest.approx(r.lam, abs=1e-10)
    names = {c.name for c in r.certificate}
    assert {"nonnegative", "residual", "below_min_degree"} <= names
    assert all(c.passed for c in r.certificate)
    d = r.to_dict()
    assert set(d) >= {"lambda", "x", "residual", "converged", "restarts_used", "checks", "config_echo"}


def test_workers_give_same_answer():
    G = coalesce(complete_hypergraph(5, 4), 0, hyperpath(1, 4), 0).graph
    a = solve_least_eigen(G, SolverConfig(restarts=4))
    b = solve_least_eigen(G, SolverConfig(restarts=4, workers=2))
    assert a.lam == b.lam
