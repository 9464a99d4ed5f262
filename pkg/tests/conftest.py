from __future__ import annotations

import pytest
from hypothesis import strategies as st

from dualfvs.graph import EdgeColoredGraph

ACCEPTANCE_LINES: list[str] = []


def graph(edges, h=2, vertices=()):
    return EdgeColoredGraph.from_edges(edges, h=h, vertices=vertices)


@pytest.fixture
def two_triangles():
    # blue triangle 1-2-3 and red triangle 3-4-5 sharing vertex 3
    return graph([(1, 2, 1), (2, 3, 1), (1, 3, 1), (3, 4, 2), (4, 5, 2), (3, 5, 2)])


@pytest.fixture
def three_triangles():
    # monochromatic triangles of colors 1, 2, 3 all through vertex 1
    return graph([(1, 2, 1), (2, 3, 1), (1, 3, 1), (1, 4, 2), (4, 5, 2), (1, 5, 2),
                  (1, 6, 3), (6, 7, 3), (1, 7, 3)], h=3)


@st.composite
def colored_graphs(draw, max_n=8, max_h=2, min_h=1, multigraph=True, max_edges=14):
    n = draw(st.integers(min_value=1, max_value=max_n))
    h = draw(st.integers(min_value=min_h, max_value=max_h))
    verts = st.integers(min_value=1, max_value=n)
    if multigraph:
        edge = st.tuples(verts, verts, st.integers(1, h))
    else:
        edge = st.tuples(verts, verts, st.integers(1, h)).filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(edge, max_size=max_edges))
    if not multigraph:
        edges = list({(min(u, v), max(u, v), c) for u, v, c in edges})
    return EdgeColoredGraph(frozenset(range(1, n + 1)), tuple(edges), h)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
