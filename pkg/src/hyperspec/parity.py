"""Odd-bipartitions over GF(2).

A bipartition ``{V1, V2}`` is odd if every edge meets ``V1`` in an odd number
of vertices.  With ``y`` the indicator of ``V1`` that is the GF(2) system
``B y = 1`` for the edge-vertex incidence matrix ``B``; rows are kept as
Python int bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, OddUniformity, TooLarge
from .hypergraph import Hypergraph

__all__ = [
    "Bipartition",
    "OddTransversalResult",
    "find_odd_bipartition",
    "verify_odd_bipartition",
    "brute_force_odd_bipartite",
    "odd_transversal_subhypergraph",
    "gf2_solve",
]


@dataclass(frozen=True)
class Bipartition:
    """``membership[v] == 1`` iff ``v`` is in ``V1``."""

    membership: tuple[int, ...]

    @classmethod
    def from_set(cls, n: int, v1) -> "Bipartition":
        s = set(v1)
        return cls(tuple(1 if v in s else 0 for v in range(n)))

    @classmethod
    def from_string(cls, bits: str) -> "Bipartition":
        return cls(tuple(int(c) for c in bits))

    @property
    def V1(self) -> frozenset[int]:
        return frozenset(v for v, b in enumerate(self.membership) if b)

    @property
    def V2(self) -> frozenset[int]:
        return frozenset(v for v, b in enumerate(self.membership) if not b)

    def complement(self) -> "Bipartition":
        return Bipartition(tuple(1 - b for b in self.membership))

    def to_string(self) -> str:
        return "".join(map(str, self.membership))

    def __len__(self):
        return len(self.membership)


@dataclass(frozen=True)
class OddTransversalResult:
    partition: Bipartition
    kept_edges: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.kept_edges)


def gf2_solve(rows: list[int], rhs: list[int], ncols: int) -> Optional[list[int]]:
    """Solve ``rows . y = rhs`` over GF(2); free variables are set to 0.

    ``rows[i]`` is a bitmask over the ``ncols`` unknowns.  Returns None when
    the system is inconsistent.
    """
    work = [(r, b) for r, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []  # (column, row index in work)
    r0 = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((i for i in range(r0, len(work)) if work[i][0] & bit), None)
        if piv is None:
            continue
        work[r0], work[piv] = work[piv], work[r0]
        prow, prhs = work[r0]
        for i in range(len(work)):
            if i != r0 and work[i][0] & bit:
                work[i] = (work[i][0] ^ prow, work[i][1] ^ prhs)
        pivots.append((col, r0))
        r0 += 1
        if r0 == len(work):
            break
    if any(r == 0 and b for r, b in work[r0:]):
        return None
    y = [0] * ncols
    # reduced form: each pivot row holds its pivot plus free columns only
    for col, i in pivots:
        y[col] = work[i][1]
    return y


def _edge_masks(G: Hypergraph) -> list[int]:
    return [sum(1 << v for v in e) for e in G.edges]


def find_odd_bipartition(
    G: Hypergraph, force_in_v1: Optional[int] = None
) -> Optional[Bipartition]:
    """Return an odd-bipartition of G, or None if none exists.

    ``force_in_v1`` adds the constraint that the given vertex lies in ``V1``.
    """
    if G.k % 2:
        raise OddUniformity(f"odd-bipartiteness is only defined for even k, got k={G.k}")
    rows = _edge_masks(G)
    rhs = [1] * len(rows)
    if force_in_v1 is not None:
        rows.append(1 << force_in_v1)
        rhs.append(1)
    y = gf2_solve(rows, rhs, G.n)
    return None if y is None else Bipartition(tuple(y))


def verify_odd_bipartition(G: Hypergraph, b: Bipartition) -> bool:
    if len(b) != G.n:
        raise DimensionMismatch(f"bipartition has length {len(b)}, hypergraph has {G.n} vertices")
    m = b.membership
    return all(sum(m[v] for v in e) % 2 == 1 for e in G.edges)


def brute_force_odd_bipartite(G: Hypergraph, max_vertices: int = 24) -> bool:
    """Exhaustive search over all ``2**n`` vertex subsets."""
    if G.n > max_vertices:
        raise TooLarge(f"brute force limited to {max_vertices} vertices, got {G.n}")
    if G.num_edges == 0:
        return True
    masks = np.array(_edge_masks(G), dtype=np.uint32)
    chunk = 1 << 16
    for start in range(0, 1 << G.n, chunk):
        subsets = np.arange(start, min(start + chunk, 1 << G.n), dtype=np.uint32)
        ok = np.ones(len(subsets), dtype=bool)
        for mask in masks:
            ok &= (np.bitwise_count(subsets & mask) & 1).astype(bool)
            if not ok.any():
                break
        if ok.any():
            return True
    return False


def odd_transversal_subhypergraph(G: Hypergraph) -> OddTransversalResult:
    """Derandomized choice of ``T`` keeping at least ``ceil(m/2)`` odd-transversal edges.

    Vertices are fixed in index order.  An edge with an undecided vertex
    counts 1/2 towards the conditional expectation; a decided edge counts
    its indicator.  Ties put the vertex outside ``T``.
    """
    if G.k % 2:
        raise OddUniformity(f"odd-transversal bound needs even k, got k={G.k}")
    last = [max(e) for e in G.edges]
    parity = [0] * G.num_edges
    bits = [0] * G.n
    inc = G.incident_edges
    for v in range(G.n):
        # only edges whose last vertex is v change status; the rest stay at 1/2
        gain = [0.0, 0.0]
        for b in (0, 1):
            for j in inc[v]:
                if last[j] == v:
                    gain[b] += (parity[j] ^ b) - 0.5
        b = 1 if gain[1] > gain[0] else 0
        bits[v] = b
        if b:
            for j in inc[v]:
                parity[j] ^= 1
    kept = tuple(j for j in range(G.num_edges) if parity[j])
    assert len(kept) >= ceil(G.num_edges / 2)
    return OddTransversalResult(Bipartition(tuple(bits)), kept)
