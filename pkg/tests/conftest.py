import pytest

from plbkit.graph import Graph, complete_graph, cycle_graph, path_graph, petersen_graph, star_graph


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def star7():
    return star_graph(7)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def single_edge():
    return Graph.from_edges(2, [(0, 1)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
