from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphlie.graphs import Graph, complete_graph, disjoint_union, path_graph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k2() -> Graph:
    return complete_graph(2)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p3_k1() -> Graph:
    return disjoint_union(path_graph(3), Graph(1))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
