"""Least H-eigenvalues of signless Laplacian tensors of uniform hypergraphs.

The core objects are :class:`Hypergraph` (k-uniform, vertices ``0..n-1``),
the odd-bipartition detector :func:`find_odd_bipartition`, the tensor kernels
in :mod:`hyperspec.tensor`, the solver :func:`solve_least_eigen` and the
experiments in :mod:`hyperspec.lab`.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .hypergraph import (
    CoalescencePresentation,
    Hypergraph,
    build_gst,
    coalesce,
    complete_hypergraph,
    hyperpath,
    hyperstar,
    is_connected,
    is_hypertree,
    new_hypergraph,
    power_hypertree,
    relocate_branch,
)
from .hgf import format_hgf, parse_hgf, read_hgf, write_hgf
from .canonical import canonical_form, is_isomorphic
from .parity import (
    Bipartition,
    brute_force_odd_bipartite,
    find_odd_bipartition,
    odd_transversal_subhypergraph,
    verify_odd_bipartition,
)
from .tensor import k_norm, normalize, q_apply, q_form, q_jacobian, residual
from .solver import EigenResult, SolverConfig, solve_least_eigen
