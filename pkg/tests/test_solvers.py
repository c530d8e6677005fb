import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plbkit.bounds import harmonic
from plbkit.errors import GraphError
from plbkit.exact import exact_mds, exact_mvc
from plbkit.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from plbkit.solvers import (
    greedy_cds,
    greedy_mds,
    greedy_mis,
    greedy_vc_degree,
    matching_vc,
    solve,
    validate_solution,
)
from test_graph import multigraphs


def test_mds_examples(p4, c6):
    assert greedy_mds(star_graph(5)).solution == (0,)
    r = greedy_mds(p4)
    assert r.solution == (1, 2) and [v for v, _ in r.trace] == [1, 2]
    assert greedy_mds(c6).size == 2


def test_cds_examples(p4, k3):
    assert greedy_cds(star_graph(5)).solution == (0,)
    assert greedy_cds(p4).solution == (1, 2)
    assert greedy_cds(k3).solution == (0,)


def test_mis_examples(p4, k3):
    r = greedy_mis(p4)
    assert r.solution == (0, 2) and [v for v, _ in r.trace] == [0, 2]
    assert greedy_mis(k3).solution == (0,)
    assert greedy_mis(star_graph(5)).solution == (1, 2, 3, 4, 5)


def test_vc_examples(p4, k3):
    assert greedy_vc_degree(star_graph(5)).solution == (0,)
    r = greedy_vc_degree(p4)
    assert [v for v, _ in r.trace] == [1, 2]
    assert greedy_vc_degree(k3).solution == (0, 1)


def test_matching_examples(p4, k3, single_edge):
    assert matching_vc(single_edge).size == 2
    assert matching_vc(k3).solution == (0, 1)
    assert matching_vc(p4).size == 4


def test_validate_examples(p4, k3):
    assert validate_solution(p4, "MDS", {1, 2}) == (True, None)
    assert validate_solution(p4, "MDS", {0}) == (False, 3)
    assert validate_solution(k3, "MIS", {0, 1}) == (False, (0, 1))
    assert validate_solution(p4, "MIS", {0}) == (False, 2)
    assert validate_solution(p4, "MVC", {1}) == (False, (2, 3))
    assert validate_solution(path_graph(5), "CDS", {1, 3}) == (False, 3)
    with pytest.raises(GraphError):
        validate_solution(p4, "MDS", {9})
    with pytest.raises(ValueError):
        validate_solution(p4, "XYZ", {0})


def test_preconditions():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError, match="vertex 2"):
        greedy_mds(g)
    with pytest.raises(GraphError):
        greedy_cds(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        solve(g, "MIS", "matching")


def test_multigraph_semantics():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], [3, 1])
    assert greedy_vc_degree(g).solution[0] == 1
    assert greedy_mds(g).solution == (1,)
    assert matching_vc(g).valid


def test_determinism(petersen):
    for prob, algo in (("MDS", "greedy"), ("CDS", "greedy"), ("MIS", "greedy"), ("MVC", "greedy"),
                       ("MVC", "matching")):
        assert solve(petersen, prob, algo).solution == solve(petersen, prob, algo).solution


@st.composite
def no_isolated(draw):
    g = draw(multigraphs(max_n=12))
    iso = g.isolated_vertices().tolist()
    if not iso:
        return g
    edges = list(g.edges.items())
    extra = [((v, (v + 1) % g.n), 1) for v in iso] if g.n > 1 else []
    pairs = [e for e, _ in edges] + [e for e, _ in extra]
    mult = [k for _, k in edges] + [1] * len(extra)
    return Graph.from_edges(g.n, pairs, mult) if g.n > 1 else Graph.from_edges(2, [(0, 1)])


@given(no_isolated())
@settings(max_examples=150, deadline=None)
def test_greedy_outputs_feasible_and_bounded(g):
    rm = greedy_mds(g)
    assert rm.valid
    opt = exact_mds(g)
    harm = sum(harmonic(len(g.adjacency[x]) + 1) for x in opt.witness)
    assert rm.size <= harm + 1e-12
    ri = greedy_mis(g)
    assert ri.valid
    avg = 2 * g.m / g.n  # degrees count parallel edges, as in the greedy
    assert ri.size >= g.n / (avg + 1) - 1e-12
    assert greedy_vc_degree(g).valid
    mv = matching_vc(g)
    assert mv.valid and mv.size <= 2 * exact_mvc(g).size
    if g.is_connected():
        assert greedy_cds(g).valid


def test_cycle_greedy_matches_closed_form():
    for n in range(3, 30):
        assert greedy_mds(cycle_graph(n)).size <= -(-n // 3) + 1
        assert greedy_mis(cycle_graph(n)).size == n // 2


def test_trace_serialisation(p4):
    d = greedy_mds(p4).to_dict(with_trace=True)
    assert d["trace"] == [{"vertex": 1, "gain": 3}, {"vertex": 2, "gain": 1}]
    assert complete_graph(1).n == 1
