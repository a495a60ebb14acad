from __future__ import annotations

import sys
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from distspec.census import enumerate_connected
from distspec.graph import Graph, is_connected

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    rows = [0] * n
    for (i, j), b in zip(pairs, bits):
        if b:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def connected_graphs(min_order: int = 1, max_order: int = 8):
    return graphs(min_order, max_order).filter(is_connected)


@st.composite
def relabelings(draw, g: Graph) -> list[int]:
    return draw(st.permutations(list(range(g.order))))


def floyd_warshall(g: Graph) -> list[list[float]]:
    """All-pairs distances with no BFS involved, as an independent oracle."""
    n = g.order
    inf = float("inf")
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@pytest.fixture(scope="session")
def census7() -> dict[int, tuple[Graph, ...]]:
    return {n: tuple(enumerate_connected(n)) for n in range(1, 8)}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
