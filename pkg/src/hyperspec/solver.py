"""Least H-eigenvalue of the signless Laplacian tensor (even k).

For even k the least H-eigenvalue is the minimum of ``q_form`` over the unit
k-norm sphere and every minimizer is an eigenvector.  The solver runs
projected gradient descent with Armijo backtracking from several seeds and
finishes each run with a bordered Newton polish on the eigen-equations.
Global optimality is not certified; seeds include the sign patterns that the
upper-bound constructions use, so the result never exceeds those bounds.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from . import tensor
from .errors import NotConnected, OddUniformity, TooLarge, WrongUniformity
from .hypergraph import Hypergraph, is_connected
from .parity import find_odd_bipartition, gf2_solve, odd_transversal_subhypergraph
from .report import Check, check_le, check_lt

__all__ = [
    "SolverConfig",
    "EigenResult",
    "solve_least_eigen",
    "matrix_oracle_k2",
    "sampling_oracle",
    "certify",
]

SEED_STRATEGIES = ("random", "parity-patterns", "mixed")


@dataclass(frozen=True)
class SolverConfig:
    restarts: int = 32
    max_iters: int = 5000
    grad_tol: float = 1e-10
    step_init: float = 0.5
    armijo_c: float = 1e-4
    armijo_shrink: float = 0.5
    rng_seed: int = 42
    seed_strategy: str = "mixed"
    # residual below which Newton polishing is attempted
    polish_threshold: float = 1e-3
    # restarts * screen seeds get screen_iters descent steps; the best
    # `restarts` of them are then run to convergence
    screen: int = 8
    screen_iters: int = 100
    workers: int = 1

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.screen < 1 or self.screen_iters < 0:
            raise ValueError("screen must be >= 1 and screen_iters >= 0")
        for name in ("grad_tol", "step_init", "armijo_c", "polish_threshold"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.armijo_shrink < 1:
            raise ValueError("armijo_shrink must lie in (0, 1)")
        if self.seed_strategy not in SEED_STRATEGIES:
            raise ValueError(f"seed_strategy must be one of {SEED_STRATEGIES}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class EigenResult:
    lam: float
    x: np.ndarray
    residual: float
    restarts_used: int
    converged: bool
    certificate: list[Check] = field(default_factory=list)
    config: Optional[SolverConfig] = None
    best_restart: int = 0
    iterations: int = 0

    def to_dict(self) -> dict:
        return {
            "lambda": float(self.lam),
            "x": [float(v) for v in self.x],
            "residual": float(self.residual),
            "converged": bool(self.converged),
            "restarts_used": int(self.restarts_used),
            "checks": {c.name: c.to_dict() for c in self.certificate},
            "config_echo": self.config.to_dict() if self.config else None,
        }


@dataclass
class _Run:
    lam: float
    x: np.ndarray
    residual: float
    converged: bool
    iterations: int
    history: list = field(default_factory=list)


def _sign_normalize(x: np.ndarray) -> np.ndarray:
    big = np.flatnonzero(np.abs(x) > 1e-8 * np.max(np.abs(x)))
    if big.size and x[big[0]] < 0:
        return -x
    return x


def _greedy_parity_pattern(G: Hypergraph, rng) -> np.ndarray:
    """Sign pattern of an odd-bipartition of a maximal odd-bipartite edge subset."""
    rows: list[int] = []
    for j in rng.permutation(G.num_edges):
        trial = rows + [sum(1 << v for v in G.edges[j])]
        if gf2_solve(trial, [1] * len(trial), G.n) is not None:
            rows = trial
    y = gf2_solve(rows, [1] * len(rows), G.n)
    return np.where(np.array(y) == 1, 1.0, -1.0)


def _seed(G: Hypergraph, cfg: SolverConfig, index: int) -> np.ndarray:
    rng = np.random.default_rng([cfg.rng_seed, index])
    if cfg.seed_strategy == "random":
        use_parity = False
    elif cfg.seed_strategy == "parity-patterns":
        use_parity = True
    else:
        use_parity = index % 2 == 0
    if not use_parity:
        return tensor.normalize(rng.standard_normal(G.n), G.k)
    if index == 0 and G.k % 2 == 0:
        b = find_odd_bipartition(G)
        if b is not None:
            x = np.where(np.array(b.membership) == 1, 1.0, -1.0)
        else:
            T = odd_transversal_subhypergraph(G).partition
            x = np.where(np.array(T.membership) == 1, 1.0, -1.0)
    else:
        x = _greedy_parity_pattern(G, rng)
    return tensor.normalize(x, G.k)


def _newton_polish(G: Hypergraph, x: np.ndarray, tol: float, max_steps: int = 40):
    """Newton on ``(q_apply(x) - lam x^[k-1], (|x|_k^k - 1)/k) = 0``."""
    k, n = G.k, G.n
    lam = tensor.q_form(G, x)

    def F(x, lam):
        return np.concatenate(
            [tensor.q_apply(G, x) - lam * x ** (k - 1), [(np.sum(x**k) - 1.0) / k]]
        )

    f = F(x, lam)
    fn = np.max(np.abs(f))
    for _ in range(max_steps):
        if fn < tol * 1e-2:
            break
        J = np.zeros((n + 1, n + 1))
        J[:n, :n] = tensor.q_jacobian(G, x)
        J[np.arange(n), np.arange(n)] -= (k - 1) * lam * x ** (k - 2)
        xk1 = x ** (k - 1)
        J[:n, n] = -xk1
        J[n, :n] = xk1
        step = np.linalg.lstsq(J, -f, rcond=None)[0]
        x_new, lam_new = x + step[:n], lam + step[n]
        f_new = F(x_new, lam_new)
        fn_new = np.max(np.abs(f_new))
        if not fn_new < fn:
            break
        x, lam, f, fn = x_new, lam_new, f_new, fn_new
    x = tensor.normalize(x, k)
    lam = tensor.q_form(G, x)
    return x, lam, tensor.residual(G, lam, x)


def _descend(G: Hypergraph, x: np.ndarray, cfg: SolverConfig, record: bool = False) -> _Run:
    """Projected gradient until ``grad_tol``, handing over to Newton once close."""
    E, d = G.edge_array, G.degrees
    threshold = cfg.polish_threshold
    step = cfg.step_init
    budget = cfg.max_iters
    history: list = []
    used = 0
    while True:
        x, f, res, it, step, status, hist = tensor.kernels.descend(
            E, d, x, budget - used, cfg.grad_tol, threshold, step,
            1e3 * cfg.step_init, cfg.armijo_c, cfg.armijo_shrink, record,
        )
        used += it
        if record:
            history.extend(hist if not history else hist[1:])
        if status == 1:
            xp, fp, rp = _newton_polish(G, x, cfg.grad_tol)
            if rp < cfg.grad_tol and fp <= f + 1e-12:
                if record:
                    history.append(fp)
                return _Run(fp, xp, rp, True, used, history)
            threshold = res * 1e-2
            continue
        return _Run(f, x, res, status == 0, used, history)


def _screen_seed(args) -> tuple[np.ndarray, float]:
    G, cfg, index = args
    x = _seed(G, cfg, index)
    if cfg.screen == 1 or cfg.screen_iters == 0:
        return x, tensor.q_form(G, x)
    x, f, *_ = tensor.kernels.descend(
        G.edge_array, G.degrees, x, cfg.screen_iters, cfg.grad_tol, cfg.grad_tol,
        cfg.step_init, 1e3 * cfg.step_init, cfg.armijo_c, cfg.armijo_shrink, False,
    )
    return x, f


def _full_run(args) -> _Run:
    G, cfg, x = args
    return _descend(G, x, cfg)


def _map(fn, jobs, workers):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def solve_least_eigen(G: Hypergraph, cfg: Optional[SolverConfig] = None) -> EigenResult:
    """Least H-eigenvalue of ``Q(G)`` and a first eigenvector with unit k-norm."""
    cfg = cfg or SolverConfig()
    if G.k % 2:
        raise OddUniformity(f"the variational characterization needs even k, got k={G.k}")
    if G.num_edges == 0:
        raise NotConnected("hypergraph has no edges")
    if not is_connected(G):
        raise NotConnected("hypergraph is not connected")
    screened = _map(_screen_seed, [(G, cfg, i) for i in range(cfg.restarts * cfg.screen)], cfg.workers)
    keep = sorted(range(len(screened)), key=lambda i: (screened[i][1], i))[: cfg.restarts]
    keep.sort()
    runs = _map(_full_run, [(G, cfg, screened[i][0]) for i in keep], cfg.workers)
    # smallest value wins, ties by seed index; prefer a converged run that
    # is indistinguishable from the overall best
    best = min(range(len(runs)), key=lambda i: (runs[i].lam, i))
    if not runs[best].converged:
        for i, r in enumerate(runs):
            if r.converged and r.lam <= runs[best].lam + 1e-9:
                best = i
                break
    run = runs[best]
    result = EigenResult(
        # every edge term sum x^k + k prod x is >= 0 for even k (AM-GM), so a
        # negative value is rounding
        lam=max(float(run.lam), 0.0),
        x=_sign_normalize(run.x),
        residual=float(run.residual),
        restarts_used=len(runs),
        converged=run.converged,
        config=cfg,
        best_restart=keep[best],
        iterations=sum(r.iterations for r in runs),
    )
    result.certificate = certify(G, result)
    return result


def descent_history(G: Hypergraph, x0, cfg: Optional[SolverConfig] = None) -> list[float]:
    """Objective values of accepted steps of a single descent from ``x0``."""
    cfg = cfg or SolverConfig()
    return _descend(G, tensor.normalize(x0, G.k), cfg, record=True).history


def certify(
    G: Hypergraph,
    r: EigenResult,
    bounds: Sequence[tuple[str, float]] = (),
    residual_tol: float = 1e-8,
) -> list[Check]:
    """Named pass/fail checks for a computed result; failures are data, not errors."""
    checks = [
        check_le("nonnegative", 0.0, r.lam, 1e-12),
        check_lt("residual", r.residual, residual_tol),
    ]
    delta = G.min_degree
    if delta > 0:
        checks.append(check_lt("below_min_degree", r.lam, float(delta)))
    for name, bound in bounds:
        checks.append(check_le(name, r.lam, bound, 1e-9))
    return checks


def matrix_oracle_k2(G: Hypergraph) -> float:
    """Least eigenvalue of the signless Laplacian matrix ``D + A`` of a graph."""
    if G.k != 2:
        raise WrongUniformity(f"matrix oracle needs k=2, got k={G.k}")
    M = np.diag(G.degrees.astype(float))
    for a, b in G.edges:
        M[a, b] += 1.0
        M[b, a] += 1.0
    return float(np.linalg.eigvalsh(M)[0])


def _batch_form(E: np.ndarray, k: int, X: np.ndarray) -> np.ndarray:
    # rows of X are points; independent of the kernel modules on purpose
    P = X[:, E]
    return (P**k).sum(axis=(1, 2)) + k * P.prod(axis=2).sum(axis=1)


def sampling_oracle(
    G: Hypergraph, budget: int = 200, rng_seed: int = 0, max_vertices: int = 12, polish: int = 4
) -> float:
    """Brute-force upper bound on the least eigenvalue.

    Every sign pattern (first entry fixed positive) is applied to ``budget``
    random magnitude profiles plus the all-ones profile; the best few points
    are then polished by BFGS on the Rayleigh-type quotient with
    finite-difference gradients.
    """
    if G.n > max_vertices:
        raise TooLarge(f"sampling oracle limited to {max_vertices} vertices, got {G.n}")
    if G.k % 2:
        raise OddUniformity(f"needs even k, got k={G.k}")
    k, E = G.k, np.array(G.edges, dtype=np.int64)
    rng = np.random.default_rng(rng_seed)
    signs = np.array([(1,) + s for s in product((1.0, -1.0), repeat=G.n - 1)])
    profiles = np.vstack([np.ones(G.n), rng.uniform(0.0, 1.0, size=(budget, G.n))])
    cands = []
    for mag in profiles:
        X = signs * mag
        X /= ((X**k).sum(axis=1) ** (1.0 / k))[:, None]
        vals = _batch_form(E, k, X)
        i = int(np.argmin(vals))
        cands.append((float(vals[i]), X[i]))
    cands.sort(key=lambda c: c[0])
    best = cands[0][0]

    def quotient(y):
        return _batch_form(E, k, y[None, :])[0] / np.sum(y**k)

    for _, y0 in cands[:polish]:
        out = minimize(quotient, y0, method="BFGS", options={"gtol": 1e-12, "maxiter": 5000})
        best = min(best, float(out.fun))
    return best
