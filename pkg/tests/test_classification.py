import json

import pytest
from hypothesis import given

from helpers import graphs
from raagp import bruteforce
from raagp.classification import (
    PROPERTY_NAMES,
    DirectWithZp,
    FreeProduct,
    ZpLeaf,
    build_construction_tree,
    check_construction_tree,
    classify,
    consumed_vertices,
    render_expression,
)
from raagp.fixtures import load_graph
from raagp.graph import SimplicialGraph, complete_graph, cone, cycle_graph, disjoint_union, path_graph
from raagp.recognition import ForbiddenCertificate


@pytest.mark.parametrize(
    "name, expression",
    [
        ("K3", "(Zp x (Zp x Zp))"),
        ("P3", "(Zp x (Zp * Zp))"),
        ("kite", "(Zp x (Zp x (Zp * Zp)))"),
    ],
)
def test_fixture_expressions(name, expression):
    r = classify(load_graph(name))
    assert r.elementary_type and r.expression == expression and r.validate()


def test_single_vertex_and_empty_graph():
    assert classify(SimplicialGraph(("v",), ())).expression == "Zp"
    r = classify(SimplicialGraph((), ()))
    assert r.elementary_type and r.construction is None and r.validate()
    with pytest.raises(ValueError):
        build_construction_tree(SimplicialGraph((), ()))


def test_discrete_graph_is_free_product():
    t = build_construction_tree(SimplicialGraph(("a", "b", "c"), ()))
    assert isinstance(t, FreeProduct) and render_expression(t) == "(Zp * Zp * Zp)"


def test_report_json_for_l3():
    d = json.loads(classify(load_graph("L3")).to_json())
    assert d["verdict"] == "forbidden"
    assert d["forbidden_cert"] == {"kind": "path4", "witness": ["x", "y", "z", "w"]}
    assert [e["property"] for e in d["equivalent_properties"]] == list(PROPERTY_NAMES)
    assert not any(e["value"] for e in d["equivalent_properties"])
    assert d["coherent"] is True and d["universally_koszul"] is False
    assert d["prime_independent"] is True


def test_c4_not_coherent():
    r = classify(load_graph("C4"))
    assert not r.coherent and r.chordality_cert.chordless_cycle == ("a", "b", "c", "d")


@given(graphs())
def test_verdict_matches_brute_force(g):
    r = classify(g)
    forbidden = bool(bruteforce.induced_square_sets(g) or bruteforce.induced_path4_sets(g))
    assert r.elementary_type != forbidden
    assert r.coherent != bruteforce.has_chordless_cycle(g)
    assert r.validate()
    if r.construction is not None:
        assert sorted(consumed_vertices(r.construction)) == sorted(g.vertices)


@given(graphs(max_vertices=5), graphs(max_vertices=4))
def test_closed_under_union_and_cone(g, h):
    h = SimplicialGraph(tuple("h" + v for v in h.vertices), tuple(("h" + a, "h" + b) for a, b in h.edges))
    both = classify(g).elementary_type and classify(h).elementary_type
    assert classify(disjoint_union(g, h)).elementary_type == both
    assert classify(cone(g, "apex")).elementary_type == classify(g).elementary_type
    t = build_construction_tree(cone(g, "apex"))
    if not isinstance(t, ForbiddenCertificate) and g.vertices:
        assert isinstance(t, DirectWithZp)


def test_tree_checker_rejects_wrong_trees():
    g = path_graph("abc")
    good = build_construction_tree(g)
    assert check_construction_tree(g, good)
    assert not check_construction_tree(g, DirectWithZp("a", good.child, good.cover))
    assert not check_construction_tree(g, FreeProduct((ZpLeaf("a"), ZpLeaf("b"), ZpLeaf("c")), ("a", "b", "c")))


def test_forbidden_graphs_return_certificates():
    for g in (cycle_graph("abcd"), path_graph("abcd"), cone(cycle_graph("abcd"), "z")):
        out = build_construction_tree(g)
        assert isinstance(out, ForbiddenCertificate)
    assert isinstance(build_construction_tree(complete_graph("abcdef")), DirectWithZp)
