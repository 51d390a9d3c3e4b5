"""Canonical labelling of small uniform hypergraphs.

Individualization-refinement: colour vertices by degree, refine by the
multiset of neighbour colours per incident edge, then branch on the first
non-singleton cell.  Leaves give labellings; the canonical form is the
lexicographically least relabelled edge list.  Twins (vertices with the same
incident-edge set) inside one cell are swapped by an automorphism fixing
everything else, so only one of them is branched on.

Fine for the ``n <= 20`` instances used here; worst case is exponential.
"""

from __future__ import annotations

from .hypergraph import Hypergraph

__all__ = ["canonical_form", "is_isomorphic"]


def _refine(G: Hypergraph, colors: list[int]) -> list[int]:
    inc = G.incident_edges
    edges = G.edges
    ncls = len(set(colors))
    while True:
        sigs = []
        for v in range(G.n):
            per_edge = sorted(
                tuple(sorted(colors[w] for w in edges[j] if w != v)) for j in inc[v]
            )
            sigs.append((colors[v], tuple(per_edge)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncls:
            return new
        colors, ncls = new, len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    # split v off to the front of its cell; other cells keep their order
    c = colors[v]
    out = [2 * x + (1 if x >= c else 0) for x in colors]
    out[v] = 2 * c
    ranks = {x: i for i, x in enumerate(sorted(set(out)))}
    return [ranks[x] for x in out]


def canonical_form(G: Hypergraph) -> tuple[int, int, tuple[tuple[int, ...], ...]]:
    """Hashable form equal for two hypergraphs iff they are isomorphic."""
    inc = [frozenset(a) for a in G.incident_edges]
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(G, colors)
        if len(set(colors)) == G.n:
            cert = tuple(sorted(tuple(sorted(colors[v] for v in e)) for e in G.edges))
            if best is None or cert < best:
                best = cert
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        tried: set[frozenset] = set()
        for v in target:
            if inc[v] in tried:
                continue
            tried.add(inc[v])
            search(_individualize(colors, v))

    search([int(d) for d in G.degrees])
    return (G.k, G.n, best)


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    if (G.k, G.n, G.num_edges) != (H.k, H.n, H.num_edges):
        return False
    if sorted(G.degrees.tolist()) != sorted(H.degrees.tolist()):
        return False
    return canonical_form(G) == canonical_form(H)
