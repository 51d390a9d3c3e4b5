"""Plain-text hypergraph format (HGF).

::

    # comment lines start with '#'
    k n m
    v v v v        <- m lines, k 0-based vertex ids each

Writers emit edges sorted lexicographically and no comments, so
``format_hgf(parse_hgf(format_hgf(G))) == format_hgf(G)``.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DuplicateEdge, NonUniformEdge, ParseError, VertexOutOfRange
from .hypergraph import Hypergraph, new_hypergraph


def format_hgf(G: Hypergraph) -> str:
    lines = [f"{G.k} {G.n} {G.num_edges}"]
    lines.extend(" ".join(map(str, e)) for e in sorted(G.edges))
    return "\n".join(lines) + "\n"


def parse_hgf(text: str) -> Hypergraph:
    header = None
    edges: list[list[int]] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 3:
                raise ParseError("header must be 'k n m'", lineno)
            header = nums
            k, n, m = header
            if k < 2 or n < 1 or m < 0:
                raise ParseError(f"invalid header values k={k} n={n} m={m}", lineno)
            continue
        k, n, m = header
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        if len(nums) != k or len(set(nums)) != k:
            raise NonUniformEdge(f"line {lineno}: edge {nums} does not have {k} distinct vertices")
        if min(nums) < 0 or max(nums) >= n:
            raise VertexOutOfRange(f"line {lineno}: edge {nums} has a vertex outside [0, {n})")
        key = tuple(sorted(nums))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge {nums} repeated")
        seen.add(key)
        edges.append(nums)
    if header is None:
        raise ParseError("missing 'k n m' header")
    k, n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return new_hypergraph(k, n, edges)


def read_hgf(path) -> Hypergraph:
    return parse_hgf(Path(path).read_text())


def write_hgf(G: Hypergraph, path) -> None:
    Path(path).write_text(format_hgf(G))
