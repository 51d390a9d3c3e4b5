import numpy as np
import pytest

from hyperspec import (
    BranchNotOddBipartite,
    HypothesisNotMet,
    InvalidBipartition,
    NotPowerHypertree,
    ZeroRootEntry,
    coalesce,
    complete_hypergraph,
    find_odd_bipartition,
    hyperpath,
    hyperstar,
    new_hypergraph,
    q_form,
    solve_least_eigen,
)
from hyperspec import lab
from hyperspec.parity import Bipartition
from hyperspec.report import FAIL, PASS, SKIP


@pytest.fixture(scope="module")
def K():
    return complete_hypergraph(5, 4)


def status(rep, name):
    return next(c.status for c in rep.checks if c.name == name)


def test_f_values_by_hand():
    assert lab.f_values(0.0, 4, 3) == [1.0, 1.0, 1.0, 1.0]
    f = lab.f_values(0.1, 4, 2)
    assert f[1] == pytest.approx(0.81)
    assert f[2] == pytest.approx(1.9 * 0.9 * 0.81 - 1)


def test_rooted_path_labels(K):
    P = coalesce(K, 0, hyperpath(2, 4), 0)
    L = lab.rooted_path_labels(P)
    assert L.label[4] == 0
    G = P.graph
    assert G.degree(L.label[2]) == 2
    assert all(G.degree(L.label[j]) == 1 for j in (0, 1, 3))
    # the far edge has k - 1 degree-one vertices, the others k - 2
    assert [len(p) for p in L.pendents] == [3, 2]
    with pytest.raises(NotPowerHypertree):
        lab.rooted_path_labels(coalesce(K, 0, hyperstar(2, 4), 0))


@pytest.mark.parametrize("branch", [hyperpath(1, 4), hyperpath(2, 4), hyperstar(2, 4), hyperpath(3, 4)])
def test_sign_structure(K, branch):
    P = coalesce(K, 0, branch, 0)
    r = solve_least_eigen(P.graph)
    rep = lab.verify_branch_sign_structure(P, r.x, r.lam)
    assert rep.passed, rep.summary_lines()
    assert status(rep, "beta_negative_when_cut_nonzero") == PASS


def test_sign_structure_flags_bad_vector(K):
    P = coalesce(K, 0, hyperpath(1, 4), 0)
    x = np.ones(P.graph.n)
    rep = lab.verify_branch_sign_structure(P, x, 0.0)
    assert status(rep, "branch_edge_products_nonpositive") == FAIL


def test_sign_structure_needs_odd_bipartite_branch(K):
    P = coalesce(hyperpath(1, 4), 0, K, 0)
    with pytest.raises(BranchNotOddBipartite):
        lab.verify_branch_sign_structure(P, np.ones(P.graph.n), 0.0)


def test_canonical_signs(K):
    P = coalesce(K, 0, hyperpath(2, 4), 0)
    r = solve_least_eigen(P.graph)
    b = find_odd_bipartition(P.branch, force_in_v1=P.branch_root)
    rng = np.random.default_rng(0)
    x = r.x * np.where(rng.random(P.graph.n) < 0.5, -1.0, 1.0)
    xt = lab.canonical_branch_signs(P, x, b)
    np.testing.assert_array_equal(np.abs(xt), np.abs(x))
    np.testing.assert_array_equal(xt[: K.n], x[: K.n])
    s = np.sign(x[P.cut])
    for w, inside in enumerate(b.membership):
        v = P.branch_map[w]
        if v != P.cut:
            assert np.sign(xt[v]) * s == (1 if inside else -1)
    # canonical form of an already canonical vector is itself
    np.testing.assert_array_equal(lab.canonical_branch_signs(P, xt, b), xt)
    # eigenvector value preserved
    y = lab.canonical_branch_signs(P, r.x, b)
    assert q_form(P.graph, y) == pytest.approx(q_form(P.graph, r.x), abs=1e-12)


def test_canonical_signs_zero_branch(K):
    P = coalesce(K, 0, hyperpath(1, 4), 0)
    b = find_odd_bipartition(P.branch, force_in_v1=0)
    x = np.zeros(P.graph.n)
    x[:5] = 1.0
    np.testing.assert_array_equal(lab.canonical_branch_signs(P, x, b), x)


def test_canonical_signs_rejects_bad_partition(K):
    P = coalesce(K, 0, hyperpath(1, 4), 0)
    with pytest.raises(InvalidBipartition):
        lab.canonical_branch_signs(P, np.ones(P.graph.n), Bipartition.from_string("0000"))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_monotone_growth_and_profile(K, m):
    P = coalesce(K, 0, hyperpath(m, 4), 0)
    r = solve_least_eigen(P.graph)
    rep = lab.verify_monotone_growth(P, r.x, r.lam)
    assert rep.passed, rep.summary_lines()
    prof = lab.path_profile(P, r.x, r.lam)
    assert prof.max_error < 1e-6
    assert prof.f_values[0] == 1.0
    assert all(0 < a < 1 for a in prof.f_values[1:])
    # entries grow from the root towards the free end
    assert all(a > b for a, b in zip(prof.entries, prof.entries[1:]))


def test_monotone_growth_vacuous_when_root_is_zero(K):
    P = coalesce(K, 0, hyperpath(2, 4), 0)
    r = solve_least_eigen(P.graph)
    x = r.x.copy()
    x[P.cut] = 0.0
    rep = lab.verify_monotone_growth(P, x, r.lam)
    assert status(rep, "strictly_increasing_from_root") == SKIP
    with pytest.raises(ZeroRootEntry):
        lab.path_profile(P, x, r.lam)


def test_monotone_growth_rejects_non_tree(K):
    P = coalesce(hyperpath(1, 4), 0, K, 0)
    with pytest.raises(NotPowerHypertree):
        lab.verify_monotone_growth(P, np.ones(P.graph.n), 0.0)


def test_relocation_strict_decrease(K):
    # K5 with pendent edges at vertices 0 and 1; move the one at 1 onto the
    # free end of the other, which carries a larger entry
    base = coalesce(K, 0, hyperpath(1, 4), 0).graph
    P = coalesce(base, 1, hyperpath(1, 4), 0)
    rep = lab.relocation_experiment(P, 5)
    assert rep.data["hypothesis_met"]
    assert status(rep, "relocation_strict") == PASS
    assert rep.data["lambda_relocated"] < rep.data["lambda"]


def test_relocation_symmetric_vertices(K):
    P = coalesce(K, 0, hyperpath(1, 4), 0)
    rep = lab.relocation_experiment(P, 1)
    assert status(rep, "isomorphic_equal") == PASS
    assert rep.passed


def test_relocation_gst(K):
    # G_{1,1} -> G_{2,0}: move the second path to the far end of the first
    P = lab.gst_presentation(K, 0, 1, 1)
    rep = lab.relocation_experiment(P, K.n)
    assert status(rep, "relocation_strict") == PASS


def test_relocation_needs_non_odd_bipartite():
    P = coalesce(hyperpath(2, 4), 1, hyperpath(1, 4), 0)
    with pytest.raises(HypothesisNotMet):
        lab.relocation_experiment(P, 0)


@pytest.mark.parametrize("total", [1, 2, 3])
def test_gst_scan(K, total):
    rep = lab.gst_scan(K, 0, total)
    assert rep.passed, rep.summary_lines()
    assert len(rep.data["rows"]) == total // 2 + 1
    lams = [row["lambda"] for row in rep.data["rows"]]
    assert min(lams) == lams[-1]


def test_enumerate_class_invariants(K):
    members = lab.enumerate_class(K, 2, solve=False)
    assert len(members) == 3
    for mb in members:
        assert mb.graph.num_edges == K.num_edges + 2
        assert mb.graph.sub_hypergraph(range(K.num_edges)).edges == K.edges


@pytest.mark.parametrize("m", [1, 2, 3])
def test_minimizer_is_path(K, m):
    best = lab.find_minimizer(K, m)
    assert best.is_path_attachment
    assert best.lam == pytest.approx(solve_least_eigen(coalesce(K, 0, hyperpath(m, 4), 0).graph).lam, abs=1e-8)


def test_path_beats_star_for_three_edges(K):
    members = {mb.describe(): mb.lam for mb in lab.enumerate_class(K, 3)}
    star = next(v for k, v in members.items() if k.startswith("star3-center"))
    path = next(v for k, v in members.items() if k.startswith("path3-end"))
    assert path < star


def test_minimizer_on_asymmetric_base(K):
    base = coalesce(K, 0, hyperpath(1, 4), 0).graph
    rep = lab.minimize_class(base, 2)
    assert rep.passed, rep.data["members"]


def test_bounds_arithmetic(K):
    P = coalesce(K, 0, hyperpath(2, 4), 0)
    b = dict(lab.branch_bounds(P))
    assert b["branch_size_bound"] == pytest.approx(4 / 7)
    assert b["branch_edges_bound"] == pytest.approx(4 / 7)
    assert b["edge_density_bound"] == pytest.approx(20 / 11)
    rep = lab.bounds_report(P)
    assert rep.passed


def test_bounds_sharper_than_min_degree(K):
    P = coalesce(K, 0, hyperpath(6, 4), 0)
    b = dict(lab.branch_bounds(P))
    assert b["branch_size_bound"] < P.graph.min_degree


def test_bounds_empty_branch(K):
    with pytest.raises(BranchNotOddBipartite):
        lab.bounds_report(coalesce(K, 0, hyperpath(0, 4), 0))


@pytest.mark.parametrize("family", ["path", "star"])
def test_limit_scan(K, family):
    rep = lab.limit_scan(K, 0, 4, family)
    assert rep.passed, rep.summary_lines()
    rows = rep.data["rows"]
    assert rows[0]["lambda"] == pytest.approx(solve_least_eigen(K).lam, abs=1e-12)


def test_coalescence_monotonicity(K):
    for H in (hyperpath(2, 4), hyperstar(3, 4)):
        rep = lab.coalescence_monotonicity(coalesce(K, 0, H, 0))
        assert status(rep, "base_strictly_above") == PASS


def test_verify_eigvec(K):
    rep = lab.verify_eigvec(coalesce(K, 0, hyperpath(2, 4), 0))
    assert rep.passed
    names = {c.name for c in rep.checks}
    assert {"path_profile_matches_recurrence", "twin_entries_equal", "branch_edge_products_nonpositive"} <= names


def test_twin_check_catches_unequal_pendents(K):
    P = coalesce(K, 0, hyperpath(1, 4), 0)
    r = solve_least_eigen(P.graph)
    x = r.x.copy()
    x[6] *= 1.1
    rep = lab.verify_monotone_growth(P, x, r.lam)
    assert status(rep, "twin_entries_equal") == FAIL
