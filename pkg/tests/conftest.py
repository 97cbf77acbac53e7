from __future__ import annotations

import pytest

from mwsp.graph import Multigraph, canonical_form
from mwsp.search import enumerate_survivors

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def connected_multigraphs(max_edges: int) -> list[Multigraph]:
    """All connected multigraphs (loops allowed) with 1..max_edges edges, up to isomorphism.

    Grown one edge at a time: either between two existing vertices (possibly a
    loop) or out to a new vertex.  Every connected graph arises this way.
    """
    level = {canonical_form(Multigraph(frozenset({0}), ())): Multigraph(frozenset({0}), ())}
    out = []
    for _ in range(max_edges):
        nxt = {}
        for g in level.values():
            n = g.num_vertices
            pairs = g.pairs()
            options = [(u, v) for u in range(n) for v in range(u, n)]
            options += [(u, n) for u in range(n)]
            for u, v in options:
                h = Multigraph.from_edges(pairs + [(u, v)], max(n, v + 1))
                nxt.setdefault(canonical_form(h), h)
        level = nxt
        out.extend(level.values())
    return out


@pytest.fixture(scope="session")
def survivors():
    return enumerate_survivors()


@pytest.fixture(scope="session")
def by_index(survivors):
    return {s.index: s for s in survivors}


@pytest.fixture(scope="session")
def small_graphs():
    return connected_multigraphs(6)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
