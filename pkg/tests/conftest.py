import pytest

from depthstab.hypergraph import Hypergraph


def hg(n, *edges):
    return Hypergraph.from_edges(n, edges)


@pytest.fixture
def p3():
    return hg(3, (1, 2), (2, 3))


@pytest.fixture
def triangle():
    return hg(3, (1, 2), (2, 3), (1, 3))


@pytest.fixture
def single_edge():
    return hg(2, (1, 2))


@pytest.fixture
def k22():
    return hg(4, (1, 3), (1, 4), (2, 3), (2, 4))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
