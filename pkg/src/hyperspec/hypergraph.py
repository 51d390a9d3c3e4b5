"""k-uniform hypergraphs: construction, validation and vertex-identification surgery.

Vertices are dense integers ``0..n-1``.  Edges are stored as sorted tuples in
insertion order; surgery operations keep the base numbering and append the
other operand's vertices, returning the maps they used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    InputNotATree,
    NonUniformEdge,
    UniformityMismatch,
    VertexNotInBase,
    VertexOutOfRange,
)

__all__ = [
    "Hypergraph",
    "CoalescencePresentation",
    "new_hypergraph",
    "is_connected",
    "is_hypertree",
    "power_hypertree",
    "hyperpath",
    "hyperstar",
    "complete_hypergraph",
    "coalesce",
    "relocate_branch",
    "build_gst",
]


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """An immutable k-uniform hypergraph on vertices ``0..n-1``.

    Construct through :func:`new_hypergraph`, which validates and normalizes;
    the bare constructor trusts its input.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, k)`` int64 array (read-only)."""
        arr = np.array(self.edges, dtype=np.int64).reshape(len(self.edges), self.k)
        arr.setflags(write=False)
        return arr

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.edge_array.ravel(), minlength=self.n).astype(np.int64)
        deg.setflags(write=False)
        return deg

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """``incident_edges[v]`` lists the indices of the edges containing v."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(a) for a in inc)

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    def sub_hypergraph(self, edge_indices: Iterable[int]) -> "Hypergraph":
        """Spanning sub-hypergraph (same vertex set) on the chosen edges."""
        return Hypergraph(self.k, self.n, tuple(self.edges[j] for j in edge_indices))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Hypergraph(
            self.k, self.n, tuple(tuple(sorted(perm[v] for v in e)) for e in self.edges)
        )

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.n, self.edge_set()) == (other.k, other.n, other.edge_set())

    def __hash__(self):
        return hash((self.k, self.n, self.edge_set()))

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.num_edges})"


def new_hypergraph(k: int, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and build a k-uniform hypergraph.

    Raises NonUniformEdge, VertexOutOfRange or DuplicateEdge on bad edges.
    """
    if k < 2:
        raise NonUniformEdge(f"uniformity must be >= 2, got {k}")
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, ...]] = set()
    out = []
    for raw in edges:
        e = tuple(sorted(int(v) for v in raw))
        if len(e) != k or len(set(e)) != k:
            raise NonUniformEdge(f"edge {list(raw)} does not have {k} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexOutOfRange(f"edge {list(e)} has a vertex outside [0, {n})")
        if e in seen:
            raise DuplicateEdge(f"edge {list(e)} appears twice")
        seen.add(e)
        out.append(e)
    return Hypergraph(k, n, tuple(out))


def is_connected(G: Hypergraph) -> bool:
    seen = np.zeros(G.n, dtype=bool)
    seen[0] = True
    stack = [0]
    inc = G.incident_edges
    while stack:
        v = stack.pop()
        for j in inc[v]:
            for w in G.edges[j]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return bool(seen.all())


def is_hypertree(G: Hypergraph) -> bool:
    # connected k-uniform G is a hypertree iff  m (k - 1) == n - 1
    return is_connected(G) and G.num_edges * (G.k - 1) == G.n - 1


def power_hypertree(tree_edges: Sequence[tuple[int, int]], k: int) -> Hypergraph:
    """k-th power of a tree on vertices ``0..len(tree_edges)``.

    Each tree edge ``(a, b)`` becomes ``{a, b}`` plus ``k - 2`` fresh vertices;
    fresh vertices are numbered after the tree vertices, edge by edge.
    """
    t = len(tree_edges) + 1
    parent = list(range(t))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in tree_edges:
        if not (0 <= a < t and 0 <= b < t) or a == b:
            raise InputNotATree(f"tree edge {(a, b)} invalid for a tree on {t} vertices")
        ra, rb = find(a), find(b)
        if ra == rb:
            raise InputNotATree(f"tree edge {(a, b)} closes a cycle")
        parent[ra] = rb
    if k < 2:
        raise NonUniformEdge(f"uniformity must be >= 2, got {k}")
    edges = []
    nxt = t
    for a, b in tree_edges:
        edges.append([a, b, *range(nxt, nxt + k - 2)])
        nxt += k - 2
    return new_hypergraph(k, nxt, edges)


def hyperpath(m: int, k: int) -> Hypergraph:
    """``P_m^k``; vertex 0 is a pendent vertex of the first edge, vertex m the far end."""
    return power_hypertree([(i, i + 1) for i in range(m)], k)


def hyperstar(m: int, k: int) -> Hypergraph:
    """``S_m^k`` with centre 0."""
    return power_hypertree([(0, i) for i in range(1, m + 1)], k)


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    """All k-subsets of ``range(n)``; ``complete_hypergraph(5, 4)`` is K5^(4)."""
    return new_hypergraph(k, n, combinations(range(n), k))


@dataclass(frozen=True, eq=False)
class CoalescencePresentation:
    """``G = base(cut) <> branch(branch_root)`` together with the vertex maps.

    Base vertices keep their ids in ``graph``; ``branch_map[w]`` is the id of
    branch vertex ``w`` in ``graph`` (the root maps to ``cut``).
    """

    base: Hypergraph
    branch: Hypergraph
    cut: int
    branch_root: int
    graph: Hypergraph
    branch_map: tuple[int, ...]

    @property
    def base_map(self) -> tuple[int, ...]:
        return tuple(range(self.base.n))

    @property
    def branch_vertices(self) -> tuple[int, ...]:
        return self.branch_map

    @property
    def base_edge_indices(self) -> range:
        return range(self.base.num_edges)

    @property
    def branch_edge_indices(self) -> range:
        return range(self.base.num_edges, self.graph.num_edges)


def coalesce(G1: Hypergraph, v1: int, G2: Hypergraph, v2: int) -> CoalescencePresentation:
    """Identify ``v1`` of G1 with ``v2`` of G2."""
    if G1.k != G2.k:
        raise UniformityMismatch(f"cannot coalesce k={G1.k} with k={G2.k}")
    if not 0 <= v1 < G1.n:
        raise VertexOutOfRange(f"vertex {v1} not in first operand (n={G1.n})")
    if not 0 <= v2 < G2.n:
        raise VertexOutOfRange(f"vertex {v2} not in second operand (n={G2.n})")
    bmap = []
    nxt = G1.n
    for w in range(G2.n):
        if w == v2:
            bmap.append(v1)
        else:
            bmap.append(nxt)
            nxt += 1
    edges = list(G1.edges) + [tuple(sorted(bmap[w] for w in e)) for e in G2.edges]
    graph = Hypergraph(G1.k, nxt, tuple(edges))
    return CoalescencePresentation(G1, G2, v1, v2, graph, tuple(bmap))


def relocate_branch(P: CoalescencePresentation, v1: int) -> CoalescencePresentation:
    """Move the branch from ``P.cut`` to base vertex ``v1``."""
    if v1 == P.cut or not 0 <= v1 < P.base.n:
        raise VertexNotInBase(f"vertex {v1} is not a base vertex distinct from the cut {P.cut}")
    return coalesce(P.base, v1, P.branch, P.branch_root)


def build_gst(G0: Hypergraph, u: int, s: int, t: int) -> Hypergraph:
    """``G_{s,t}``: hyperpaths P_s^k and P_t^k hung from u by pendent vertices."""
    if not 0 <= u < G0.n:
        raise VertexOutOfRange(f"vertex {u} not in base (n={G0.n})")
    if s < 0 or t < 0:
        raise ValueError("path lengths must be nonnegative")
    G = G0
    for length in (s, t):
        if length:
            G = coalesce(G, u, hyperpath(length, G0.k), 0).graph
    return G
