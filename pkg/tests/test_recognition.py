import itertools

import pytest
from hypothesis import given

from helpers import chordal_graphs, graphs
from raagp import bruteforce
from raagp.fixtures import load_graph
from raagp.graph import SimplicialGraph, complete_graph, cycle_graph, path_graph
from raagp.recognition import (
    PATH4,
    SQUARE,
    ChordalityCertificate,
    ForbiddenCertificate,
    check_chordality_certificate,
    check_forbidden_certificate,
    chordality,
    find_chordless_cycle,
    find_dominating_vertex,
    find_forbidden,
    find_induced_path4,
    find_induced_square,
    is_chordless_cycle,
    lex_bfs,
    perfect_elimination_failure,
)


def test_fixture_witnesses():
    assert find_induced_path4(load_graph("L3")) == ForbiddenCertificate(PATH4, ("x", "y", "z", "w"))
    assert find_induced_square(load_graph("L3")) is None
    assert find_induced_square(load_graph("C4")) == ForbiddenCertificate(SQUARE, ("a", "b", "c", "d"))
    assert find_induced_path4(load_graph("C4")) is None


def test_five_cycle():
    g = cycle_graph("abcde")
    assert find_induced_square(g) is None
    assert find_induced_path4(g).witness == ("a", "b", "c", "d")
    cert = chordality(g)
    assert cert.chordless_cycle == ("a", "b", "c", "d", "e")
    assert check_chordality_certificate(g, cert)


def test_witness_is_least_four_set():
    # two squares; the one on the earliest vertices wins
    g = SimplicialGraph.from_edges(
        [("e", "f"), ("f", "g"), ("g", "h"), ("h", "e"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        "abcdefgh",
    )
    assert set(find_induced_square(g).witness) == set("abcd")


@given(graphs())
def test_searches_agree_with_brute_force(g):
    for found, sets in (
        (find_induced_square(g), bruteforce.induced_square_sets(g)),
        (find_induced_path4(g), bruteforce.induced_path4_sets(g)),
    ):
        assert (found is None) == (not sets)
        if found:
            assert check_forbidden_certificate(g, found)
            assert g.ordered(found.witness) == sets[0]


def test_certificate_checker_rejects_forgeries():
    g = load_graph("L3")
    assert not check_forbidden_certificate(g, ForbiddenCertificate(PATH4, ("y", "x", "z", "w")))
    assert not check_forbidden_certificate(g, ForbiddenCertificate(SQUARE, ("x", "y", "z", "w")))
    assert not check_forbidden_certificate(g, ForbiddenCertificate(PATH4, ("x", "y", "z")))
    assert not check_forbidden_certificate(g, ForbiddenCertificate(PATH4, ("x", "y", "z", "q")))


@given(graphs(min_vertices=1))
def test_dominating_vertex_in_forbidden_free_connected_graphs(g):
    from raagp.graph import connected_components, induced_subgraph

    for comp in connected_components(g):
        h = induced_subgraph(g, comp)
        d = find_dominating_vertex(h)
        if d is not None:
            assert all(v == d or h.adjacent(v, d) for v in h.vertices)
        elif find_forbidden(h) is None:
            pytest.fail("connected forbidden-free graph without dominating vertex")


def test_dominating_vertex_needs_connected_input():
    with pytest.raises(ValueError):
        find_dominating_vertex(SimplicialGraph(("a", "b"), ()))


def test_lex_bfs_breaks_ties_by_vertex_order():
    assert lex_bfs(path_graph("abcd")) == ["a", "b", "c", "d"]
    assert lex_bfs(SimplicialGraph(("q", "p", "r"), ())) == ["q", "p", "r"]


@given(graphs())
def test_chordality_agrees_with_brute_force(g):
    cert = chordality(g)
    assert cert.chordal != bruteforce.has_chordless_cycle(g)
    assert check_chordality_certificate(g, cert)


@given(graphs(max_vertices=6))
def test_peo_exists_iff_chordal(g):
    assert chordality(g).chordal == bruteforce.has_perfect_elimination_order(g)


@given(chordal_graphs())
def test_generated_chordal_graphs(g):
    cert = chordality(g)
    assert cert.chordal and perfect_elimination_failure(g, cert.peo) is None


def test_kite_peo_against_brute_force():
    g = load_graph("kite")
    cert = chordality(g)
    assert cert.peo == ("d", "c", "b", "a")
    valid = {
        order
        for order in itertools.permutations(g.vertices)
        if perfect_elimination_failure(g, order) is None
    }
    assert cert.peo in valid


def test_chordality_checker_rejects_bad_certificates():
    c4 = load_graph("C4")
    assert not check_chordality_certificate(c4, ChordalityCertificate("chordal", ("a", "b", "c", "d"), None))
    assert not check_chordality_certificate(c4, ChordalityCertificate("not_chordal", None, ("a", "b", "c")))
    kite = load_graph("kite")
    assert not check_chordality_certificate(kite, ChordalityCertificate("not_chordal", None, ("a", "b", "c", "d")))


def test_chordless_cycle_helpers():
    g = cycle_graph("abcdef")
    cyc = find_chordless_cycle(g)
    assert len(cyc) == 6 and is_chordless_cycle(g, cyc)
    assert find_chordless_cycle(complete_graph("abcd")) is None
    assert not is_chordless_cycle(complete_graph("abcd"), ("a", "b", "c", "d"))
