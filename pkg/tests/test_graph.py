import pytest
from hypothesis import given

from helpers import graphs
from raagp import bruteforce
from raagp.graph import (
    CliqueLimitError,
    GraphError,
    GraphFormatError,
    SimplicialGraph,
    complete_graph,
    connected_components,
    cycle_graph,
    enumerate_cliques,
    induced_subgraph,
    maximal_cliques,
    parse_graph,
    path_graph,
    render_graph,
)


def test_edge_list_parsing_keeps_first_appearance_order():
    g = parse_graph("# a path\nb-a\n\nc - b  # trailing comment\nd\n")
    assert g.vertices == ("b", "a", "c", "d")
    assert g.edges == (("b", "a"), ("b", "c"))


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("a-b\na-a\n", 2, 1),
        ("a-b\n  b-a\n", 2, 3),
        ("a-b-c\n", 1, 1),
        ("a-\n", 1, 3),
        ("x\n  q r\n", 2, 3),
    ],
)
def test_edge_list_errors_report_position(text, line, column):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize(
    "data",
    [
        '{"vertices": ["a"], "edges": [["a", "a"]]}',
        '{"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}',
        '{"vertices": ["a"], "edges": [["a", "b"]]}',
        '{"vertices": ["a", "a"]}',
        '{"edges": []}',
        '{"vertices": ["a"], "edges": [["a"]]}',
    ],
)
def test_json_rejects_bad_graphs(data):
    with pytest.raises(GraphError):
        parse_graph(data, "json")


def test_json_syntax_error_has_position():
    with pytest.raises(GraphFormatError) as info:
        parse_graph('{"vertices": [\n  "a",\n}', "json")
    assert info.value.line == 3


@given(graphs())
def test_round_trip_both_formats(g):
    for fmt in ("edge_list", "json"):
        text = render_graph(g, fmt)
        h = parse_graph(text, fmt)
        assert h == g
        assert render_graph(h, fmt) == text


def test_edge_order_is_normalized():
    g = SimplicialGraph(("a", "b", "c"), (("c", "a"), ("b", "a")))
    assert g.edges == (("a", "b"), ("a", "c"))
    assert g.degree("a") == 2 and g.adjacent("c", "a")


def test_components_sorted_by_least_member():
    g = SimplicialGraph.from_edges([("d", "b"), ("a", "c")], ["a", "b", "c", "d", "e"])
    assert connected_components(g) == [("a", "c"), ("b", "d"), ("e",)]


@given(graphs())
def test_clique_counts_match_brute_force(g):
    census = enumerate_cliques(g)
    assert census.counts == bruteforce.clique_counts(g)
    assert len(set(census.cliques)) == len(census.cliques)
    assert all(g.is_complete(c) for c in census.cliques)


@given(graphs())
def test_maximal_cliques_are_maximal(g):
    for c in maximal_cliques(g):
        assert g.is_complete(c)
        assert not any(g.is_complete(set(c) | {v}) for v in g.vertices if v not in c)


def test_clique_counts_of_small_graphs():
    # hand counts: C4 has 4 vertices and 4 edges; L3 has 4 and 3
    assert enumerate_cliques(cycle_graph("abcd")).counts == {0: 1, 1: 4, 2: 4}
    assert enumerate_cliques(path_graph("xyzw")).counts == {0: 1, 1: 4, 2: 3}
    assert enumerate_cliques(complete_graph("abcde")).counts == {0: 1, 1: 5, 2: 10, 3: 10, 4: 5, 5: 1}


def test_clique_cap():
    with pytest.raises(CliqueLimitError):
        enumerate_cliques(complete_graph([f"v{i}" for i in range(5)]), cap=4)


def test_induced_subgraph_keeps_global_order():
    g = cycle_graph("abcde")
    h = induced_subgraph(g, ["e", "a", "c"])
    assert h.vertices == ("a", "c", "e") and h.edges == (("a", "e"),)
