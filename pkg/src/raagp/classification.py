"""Elementary-type decision with construction trees, and the full property report."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .graph import GraphError, SimplicialGraph, connected_components, graph_to_dict, induced_subgraph
from .recognition import (
    ChordalityCertificate,
    ForbiddenCertificate,
    check_chordality_certificate,
    check_forbidden_certificate,
    chordality,
    find_forbidden,
)

# Six equivalent properties of G_Gamma, in the order they are usually listed.
# Only the first (and the sixth, via the construction tree) is checked on
# the graph; the others follow from the equivalence theorem.
PROPERTY_NAMES = (
    "no_induced_square_or_path4",
    "closed_subgroups_are_raags",
    "absolutely_torsion_free",
    "bloch_kato",
    "maximal_pro_p_galois_group",
    "elementary_type",
)


@dataclass(frozen=True)
class ZpLeaf:
    vertex: str

    @property
    def cover(self) -> tuple[str, ...]:
        return (self.vertex,)


@dataclass(frozen=True)
class DirectWithZp:
    apex: str
    child: "ConstructionTree"
    cover: tuple[str, ...]


@dataclass(frozen=True)
class FreeProduct:
    children: tuple["ConstructionTree", ...]
    cover: tuple[str, ...]


ConstructionTree = Union[ZpLeaf, DirectWithZp, FreeProduct]


class _NoDominatingVertex(Exception):
    pass


def build_construction_tree(g: SimplicialGraph) -> Union[ConstructionTree, ForbiddenCertificate]:
    """Split off components and dominating vertices until only leaves remain.

    Returns the forbidden certificate for ``g`` when some connected piece has
    no dominating vertex.
    """
    if not g.vertices:
        raise GraphError("construction tree of the empty graph is undefined")
    try:
        return _build(g, tuple(g.vertices))
    except _NoDominatingVertex:
        cert = find_forbidden(g)
        if cert is None:  # pragma: no cover - Droms' lemma
            raise AssertionError("connected graph without dominating vertex but no C4/P4")
        return cert


def _build(g: SimplicialGraph, cover: tuple[str, ...]) -> ConstructionTree:
    if len(cover) == 1:
        return ZpLeaf(cover[0])
    comps = connected_components(g, within=cover)
    if len(comps) > 1:
        return FreeProduct(tuple(_build(g, c) for c in comps), cover)
    members = set(cover)
    for v in cover:
        if members - {v} <= g.neighbors(v):
            rest = tuple(u for u in cover if u != v)
            return DirectWithZp(v, _build(g, rest), cover)
    raise _NoDominatingVertex


def render_expression(t: ConstructionTree) -> str:
    if isinstance(t, ZpLeaf):
        return "Zp"
    if isinstance(t, DirectWithZp):
        return f"(Zp x {render_expression(t.child)})"
    return "(" + " * ".join(render_expression(c) for c in t.children) + ")"


def tree_to_dict(t: ConstructionTree) -> dict:
    if isinstance(t, ZpLeaf):
        return {"kind": "ZpLeaf", "vertex": t.vertex}
    if isinstance(t, DirectWithZp):
        return {"kind": "DirectWithZp", "apex": t.apex, "cover": list(t.cover), "child": tree_to_dict(t.child)}
    return {"kind": "FreeProduct", "cover": list(t.cover), "children": [tree_to_dict(c) for c in t.children]}


def consumed_vertices(t: ConstructionTree) -> list[str]:
    """Leaves and apexes, each vertex appearing once per consumption."""
    if isinstance(t, ZpLeaf):
        return [t.vertex]
    if isinstance(t, DirectWithZp):
        return [t.apex] + consumed_vertices(t.child)
    return [v for c in t.children for v in consumed_vertices(c)]


def check_construction_tree(g: SimplicialGraph, t: ConstructionTree) -> bool:
    """Validate the structural invariants of a construction tree against ``g``."""
    if sorted(consumed_vertices(t)) != sorted(g.vertices):
        return False
    return _check_node(g, t)


def _check_node(g: SimplicialGraph, t: ConstructionTree) -> bool:
    if isinstance(t, ZpLeaf):
        return t.vertex in g
    if isinstance(t, DirectWithZp):
        child = t.child.cover
        return (
            set(t.cover) == {t.apex} | set(child)
            and t.apex not in child
            and all(g.adjacent(t.apex, v) for v in child)
            and _check_node(g, t.child)
        )
    covers = [c.cover for c in t.children]
    if len(covers) < 2 or sum(map(len, covers)) != len(set().union(*covers)):
        return False
    if set().union(*covers) != set(t.cover):
        return False
    # one child per component of the induced subgraph on the cover
    comps = {frozenset(c) for c in connected_components(induced_subgraph(g, t.cover))}
    if comps != {frozenset(c) for c in covers}:
        return False
    return all(_check_node(g, c) for c in t.children)


@dataclass(frozen=True)
class ClassificationReport:
    graph: SimplicialGraph
    verdict: str  # "elementary_type" or "forbidden"
    construction: ConstructionTree | None
    forbidden_cert: ForbiddenCertificate | None
    equivalent_properties: tuple[tuple[str, bool], ...]
    universally_koszul: bool
    coherent: bool
    chordality_cert: ChordalityCertificate

    @property
    def elementary_type(self) -> bool:
        return self.verdict == "elementary_type"

    @property
    def expression(self) -> str | None:
        return None if self.construction is None else render_expression(self.construction)

    def validate(self) -> bool:
        """Re-check every certificate and the consistency of the flags."""
        flags = {value for _, value in self.equivalent_properties}
        if len(flags) != 1 or [n for n, _ in self.equivalent_properties] != list(PROPERTY_NAMES):
            return False
        (flag,) = flags
        if flag != self.elementary_type or self.universally_koszul != flag:
            return False
        if self.elementary_type:
            if self.forbidden_cert is not None:
                return False
            if self.graph.vertices and not check_construction_tree(self.graph, self.construction):
                return False
        elif self.construction is not None or not check_forbidden_certificate(self.graph, self.forbidden_cert):
            return False
        return self.coherent == self.chordality_cert.chordal and check_chordality_certificate(
            self.graph, self.chordality_cert
        )

    def to_dict(self) -> dict:
        return {
            "graph": {**graph_to_dict(self.graph), "vertex_count": len(self.graph), "edge_count": len(self.graph.edges)},
            "verdict": self.verdict,
            "construction": None if self.construction is None else tree_to_dict(self.construction),
            "expression": self.expression,
            "forbidden_cert": None if self.forbidden_cert is None else self.forbidden_cert.to_dict(),
            "equivalent_properties": [{"property": n, "value": v} for n, v in self.equivalent_properties],
            "universally_koszul": self.universally_koszul,
            "coherent": self.coherent,
            "chordality_cert": self.chordality_cert.to_dict(),
            "prime_independent": True,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        g = self.graph
        lines = [f"graph: {len(g)} vertices, {len(g.edges)} edges"]
        if self.elementary_type:
            lines.append("verdict: elementary type")
            if self.construction is not None:
                lines.append(f"construction: {self.expression}")
        else:
            c = self.forbidden_cert
            lines.append(f"verdict: forbidden induced {c.kind} ({', '.join(c.witness)})")
        for name, value in self.equivalent_properties:
            lines.append(f"  {name}: {str(value).lower()}")
        lines.append(f"universally_koszul: {str(self.universally_koszul).lower()}")
        cc = self.chordality_cert
        if cc.chordal:
            lines.append(f"coherent: true (perfect elimination order {' '.join(cc.peo)})")
        else:
            lines.append(f"coherent: false (chordless cycle {' '.join(cc.chordless_cycle)})")
        lines.append("all verdicts are independent of the prime p")
        return "\n".join(lines) + "\n"


def classify(g: SimplicialGraph) -> ClassificationReport:
    if g.vertices:
        outcome = build_construction_tree(g)
    else:
        outcome = None  # the empty graph is forbidden-free by convention
    is_tree = not isinstance(outcome, ForbiddenCertificate)
    chord = chordality(g)
    return ClassificationReport(
        graph=g,
        verdict="elementary_type" if is_tree else "forbidden",
        construction=outcome if is_tree else None,
        forbidden_cert=None if is_tree else outcome,
        equivalent_properties=tuple((name, is_tree) for name in PROPERTY_NAMES),
        universally_koszul=is_tree,
        coherent=chord.chordal,
        chordality_cert=chord,
    )
