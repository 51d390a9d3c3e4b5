"""Rooted k-uniform hypertrees with at most three edges.

Every hypertree with three or fewer edges is a power hypertree (a non-power
edge needs three neighbours, hence four edges), so the catalog below lists
rooted powers of the trees with 1-3 edges, one entry per root orbit.  Several
hypertrees hung at the same vertex merge into one rooted hypertree, which is
why the catalog also has roots of degree two and three.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Union

from .canonical import canonical_form
from .errors import BudgetExceeded
from .hypergraph import Hypergraph, coalesce, power_hypertree

_P2 = ((0, 1), (1, 2))
_P3 = ((0, 1), (1, 2), (2, 3))
_S3 = ((0, 1), (0, 2), (0, 3))

# name -> (tree edges, root); an int root is a tree vertex, ("pad", i) is the
# first padding vertex of tree edge i
CATALOG: dict[int, tuple[tuple[str, tuple, Union[int, tuple]], ...]] = {
    1: (("edge", ((0, 1),), 0),),
    2: (
        ("path2-end", _P2, 0),
        ("path2-center", _P2, 1),
    ),
    3: (
        ("path3-end", _P3, 0),
        ("path3-joint", _P3, 1),
        ("path3-middle-pad", _P3, ("pad", 1)),
        ("star3-center", _S3, 0),
        ("star3-leaf", _S3, 1),
    ),
}

PATH_SHAPES = {"edge", "path2-end", "path3-end"}


@dataclass(frozen=True)
class RootedShape:
    name: str
    graph: Hypergraph
    root: int


def rooted_shapes(size: int, k: int) -> list[RootedShape]:
    if size not in CATALOG:
        raise BudgetExceeded(f"rooted hypertree catalog covers 1-3 edges, not {size}")
    out = []
    for name, tree, root in CATALOG[size]:
        if isinstance(root, tuple):
            if k < 3:
                continue  # no padding vertices in plain graphs
            root = len(tree) + 1 + root[1] * (k - 2)
        out.append(RootedShape(name, power_hypertree(list(tree), k), root))
    return out


def _allocations(nverts: int, m: int) -> Iterator[tuple[int, ...]]:
    # edge counts per base vertex summing to m
    for alloc in product(range(m + 1), repeat=nverts):
        if sum(alloc) == m:
            yield alloc


def attach(G0: Hypergraph, attachments) -> Hypergraph:
    G = G0
    for v, shape in attachments:
        G = coalesce(G, v, shape.graph, shape.root).graph
    return G


def catalog_members(G0: Hypergraph, m: int, max_candidates: int = 200_000):
    """Distinct (up to isomorphism) members of the attachment class.

    Yields ``(graph, attachments)`` with attachments a tuple of
    ``(base vertex, shape name)``.
    """
    if m == 0:
        yield G0, ()
        return
    if m > 3:
        raise BudgetExceeded(f"class enumeration is limited to m <= 3, got {m}")
    shapes = {j: rooted_shapes(j, G0.k) for j in range(1, m + 1)}
    seen = set()
    count = 0
    for alloc in _allocations(G0.n, m):
        sites = [(v, j) for v, j in enumerate(alloc) if j]
        for choice in product(*(shapes[j] for _, j in sites)):
            count += 1
            if count > max_candidates:
                raise BudgetExceeded(f"more than {max_candidates} candidates")
            att = [(v, s) for (v, _), s in zip(sites, choice)]
            G = attach(G0, att)
            key = canonical_form(G)
            if key in seen:
                continue
            seen.add(key)
            yield G, tuple((v, s.name) for v, s in att)


def grown_members(G0: Hypergraph, m: int) -> dict:
    """Independent enumeration: add m pendent edges one at a time, anywhere.

    Returns ``{canonical form: hypergraph}``.
    """
    level = {canonical_form(G0): G0}
    for _ in range(m):
        nxt = {}
        for G in level.values():
            for v in range(G.n):
                edge = power_hypertree([(0, 1)], G.k)
                H = coalesce(G, v, edge, 0).graph
                nxt.setdefault(canonical_form(H), H)
        level = nxt
    return level


def is_pendent_path_attachment(G: Hypergraph, base_n: int, base_m: int) -> bool:
    """True iff the edges after the first ``base_m`` form one hyperpath that
    touches the base (vertices ``< base_n``) only at one of its pendent ends."""
    extra = G.edges[base_m:]
    if not extra:
        return True
    deg: dict[int, int] = {}
    for e in extra:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    touch = [v for v in deg if v < base_n]
    if len(touch) != 1 or deg[touch[0]] != 1:
        return False
    if len(deg) != len(extra) * (G.k - 1) + 1 or max(deg.values()) > 2:
        return False
    for e in extra:
        joints = sum(1 for v in e if deg[v] == 2)
        if joints > 2:
            return False
    root_edge = next(e for e in extra if touch[0] in e)
    if sum(1 for v in root_edge if deg[v] == 2) > 1:
        return False
    # connectivity of the attached part
    sub = Hypergraph(G.k, G.n, extra)
    seen = {touch[0]}
    stack = [touch[0]]
    while stack:
        v = stack.pop()
        for j in sub.incident_edges[v]:
            for w in extra[j]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen == set(deg)
