import pytest

from pivotloop.graphs import parse_graph
from pivotloop.setsystem import SetSystem

PQRS_GRAPH = """\
vertices: p q r s
loop p
loop q
edge p q
edge p r
edge p s
edge r s
"""

PQRS_FAMILY = [
    [], ["p"], ["q"], ["p", "r"], ["p", "s"], ["r", "s"],
    ["p", "q", "r"], ["p", "q", "s"], ["p", "r", "s"], ["q", "r", "s"],
]


@pytest.fixture
def pqrs_graph():
    return parse_graph(PQRS_GRAPH)


@pytest.fixture
def pqrs_ss(pqrs_graph):
    return SetSystem.from_sets(pqrs_graph.ground, PQRS_FAMILY)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        from pivotloop import _core

        terminalreporter.section(f"acceptance criteria (backend: {_core.BACKEND})")
        for line in RESULTS:
            terminalreporter.write_line(line)
