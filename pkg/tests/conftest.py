import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from domideal import Graph, parse_edge_list  # noqa: E402
from domideal.graph import complete_graph, cycle_graph, path_graph  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture
def graph1():
    """P2-corona: path X1-X2-X3 with whiskers X4, X5, X6."""
    return parse_edge_list((DATA / "graph1.txt").read_text())


@pytest.fixture
def graph2():
    """C3-corona on the same six labels."""
    return parse_edge_list((DATA / "graph2.txt").read_text())


@pytest.fixture
def K1():
    return Graph(1)


@pytest.fixture
def K2():
    return complete_graph(2)


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def P4():
    return path_graph(4)


@pytest.fixture
def C3():
    return cycle_graph(3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
