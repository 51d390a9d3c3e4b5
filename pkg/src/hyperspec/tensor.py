"""Implicit signless Laplacian tensor evaluation.

``Q(G) x^k = sum_e (sum_{v in e} x_v^k + k prod_{v in e} x_v)`` and
``(Q(G) x^{k-1})_v = d(v) x_v^{k-1} + sum_{e ∋ v} prod_{w in e, w != v} x_w``,
computed edge by edge without materializing the order-k tensor.

The compiled kernels are used when importable; setting ``HYPERSPEC_PURE_PYTHON=1``
forces the numpy fallback.  :data:`BACKEND` names the active one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ZeroVector
from .hypergraph import CoalescencePresentation, Hypergraph

if os.environ.get("HYPERSPEC_PURE_PYTHON"):
    from . import _pykernels as _kernels
else:
    try:
        from . import _ckernels as _kernels
    except ImportError:  # extension not built
        from . import _pykernels as _kernels

BACKEND: str = _kernels.NAME
kernels = _kernels


def set_backend(name: str) -> str:
    """Switch kernels at runtime (``"cython"`` or ``"python"``); returns the previous name."""
    global kernels, BACKEND
    if name == "python":
        from . import _pykernels as mod
    elif name == "cython":
        from . import _ckernels as mod
    else:
        raise ValueError(f"unknown backend {name!r}")
    prev, kernels, BACKEND = BACKEND, mod, mod.NAME
    return prev

__all__ = [
    "BACKEND",
    "set_backend",
    "BranchBoundary",
    "k_norm",
    "normalize",
    "q_form",
    "q_apply",
    "q_jacobian",
    "residual",
    "residual_vector",
    "branch_boundary",
]


def _vec(G: Hypergraph, x) -> np.ndarray:
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.shape != (G.n,):
        raise DimensionMismatch(f"vector of shape {x.shape} for hypergraph on {G.n} vertices")
    return x


def k_norm(x, k: int) -> float:
    x = np.asarray(x, dtype=np.float64)
    # scale first so x**k cannot overflow/underflow for k up to 12
    s = np.max(np.abs(x)) if x.size else 0.0
    if s == 0.0:
        return 0.0
    return float(s * np.sum((x / s) ** k) ** (1.0 / k))


def normalize(x, k: int) -> np.ndarray:
    nrm = k_norm(x, k)
    if nrm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return np.asarray(x, dtype=np.float64) / nrm


def q_form(G: Hypergraph, x) -> float:
    return kernels.q_form(G.edge_array, _vec(G, x))


def q_apply(G: Hypergraph, x) -> np.ndarray:
    return kernels.q_apply(G.edge_array, G.degrees, _vec(G, x))


def q_jacobian(G: Hypergraph, x) -> np.ndarray:
    """Derivative of :func:`q_apply`; equals ``1/k`` times the Hessian of :func:`q_form`."""
    return kernels.q_jacobian(G.edge_array, G.degrees, _vec(G, x))


def residual_vector(G: Hypergraph, lam: float, x) -> np.ndarray:
    x = _vec(G, x)
    return q_apply(G, x) - lam * x ** (G.k - 1)


def residual(G: Hypergraph, lam: float, x) -> float:
    """Max-norm eigen-equation residual after scaling x to unit k-norm."""
    x = normalize(_vec(G, x), G.k)
    return float(np.max(np.abs(residual_vector(G, lam, x)))) if G.n else 0.0


@dataclass(frozen=True)
class BranchBoundary:
    """Split of the cut-vertex term ``d(u) x_u^k + sum_{e ∋ u} x^e``.

    ``beta`` is the branch share, ``alpha`` the base share.
    """

    beta: float
    alpha: float


def branch_boundary(P: CoalescencePresentation, x) -> BranchBoundary:
    G = P.graph
    x = _vec(G, x)
    u = P.cut
    k = G.k
    xu_k = x[u] ** k
    E = G.edge_array

    def share(edge_range):
        idx = [j for j in edge_range if u in G.edges[j]]
        prods = float(np.prod(x[E[idx]], axis=1).sum()) if idx else 0.0
        return len(idx) * xu_k + prods

    return BranchBoundary(beta=share(P.branch_edge_indices), alpha=share(P.base_edge_indices))
