import numpy as np
import pytest
from hypothesis import settings

from hyperspec import complete_hypergraph, new_hypergraph

# fixed example streams so a run can be repeated exactly
settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")


def random_connected(rng, k, n, extra):
    """Connected k-uniform hypergraph on n vertices: a random spanning chain of
    edges, each meeting the covered set, plus up to ``extra`` random edges."""
    order = rng.permutation(n)
    covered = [int(order[0])]
    pending = [int(v) for v in order[1:]]
    edges = set()
    while pending:
        new = min(len(pending), int(rng.integers(1, k)))
        fresh, pending = pending[:new], pending[new:]
        old = rng.choice(covered, size=min(k - new, len(covered)), replace=False).tolist()
        # top up from the already covered set when it is still small
        if len(old) + new < k:
            fill = [v for v in range(n) if v not in old and v not in fresh]
            old += rng.choice(fill, size=k - new - len(old), replace=False).tolist()
        edges.add(tuple(sorted(fresh + old)))
        covered += fresh
    for _ in range(extra):
        edges.add(tuple(sorted(rng.choice(n, size=k, replace=False).tolist())))
    return new_hypergraph(k, n, sorted(edges))


def random_graph(rng, n, extra):
    return random_connected(rng, 2, n, extra)


@pytest.fixture
def k5():
    return complete_hypergraph(5, 4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
