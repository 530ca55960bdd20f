"""Finite graphs of groups, clique-separator decompositions, tree kernels.

Boundary maps are only checked for totality: each edge-group generator must
have an image word in the endpoint vertex group. Whether those maps are
injective is not something that can be read off from words, so it is left
to whoever builds the graph of groups.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Mapping, Union

from .graph import (
    DEFAULT_CLIQUE_CAP,
    GraphError,
    SimplicialGraph,
    connected_components,
    enumerate_cliques,
    induced_subgraph,
)
from .presentations import (
    GroupPresentation,
    PresentationError,
    Word,
    _dedupe,
    presentation_from_dict,
    raag_presentation,
    word_from_json,
)
from .recognition import ChordalityCertificate, chordality


class GraphOfGroupsError(ValueError):
    pass


class NotChordalError(GraphError):
    def __init__(self, certificate: ChordalityCertificate):
        super().__init__(f"graph is not chordal: chordless cycle {' '.join(certificate.chordless_cycle)}")
        self.certificate = certificate


@dataclass(frozen=True)
class GogEdge:
    id: str
    ends: tuple[str, str]
    group: GroupPresentation
    d0: Mapping[str, Word]
    d1: Mapping[str, Word]

    @property
    def is_loop(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass(frozen=True)
class GraphOfGroups:
    """Vertex groups, edge groups and boundary maps over a connected finite graph.

    The underlying graph may have loops and parallel edges. ``spanning_tree``
    lists the ids of the edges in a maximal subtree D; edges outside D get a
    stable letter named after the edge id.
    """

    vertices: tuple[tuple[str, GroupPresentation], ...]
    edges: tuple[GogEdge, ...]
    spanning_tree: tuple[str, ...]

    def vertex_group(self, v: str) -> GroupPresentation:
        return dict(self.vertices)[v]

    def validate(self) -> None:
        groups = dict(self.vertices)
        if len(groups) != len(self.vertices):
            raise GraphOfGroupsError("duplicate vertex labels")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphOfGroupsError("duplicate edge ids")
        for e in self.edges:
            for end, side, dmap in ((e.ends[0], "d0", e.d0), (e.ends[1], "d1", e.d1)):
                if end not in groups:
                    raise GraphOfGroupsError(f"edge {e.id} ends at unknown vertex {end!r}")
                missing = [x for x in e.group.generators if x not in dmap]
                if missing:
                    raise GraphOfGroupsError(f"edge {e.id}: {side} undefined on {missing}")
                extra = sorted(set(dmap) - set(e.group.generators))
                if extra:
                    raise GraphOfGroupsError(f"edge {e.id}: {side} maps unknown edge generators {extra}")
                known = set(groups[end].generators)
                for x, w in dmap.items():
                    bad = w.generators() - known
                    if bad:
                        raise GraphOfGroupsError(
                            f"edge {e.id}: {side}({x}) uses {sorted(bad)}, not generators of vertex {end!r}"
                        )
        by_id = {e.id: e for e in self.edges}
        unknown = [i for i in self.spanning_tree if i not in by_id]
        if unknown:
            raise GraphOfGroupsError(f"spanning tree lists unknown edges {unknown}")
        if len(set(self.spanning_tree)) != len(self.spanning_tree):
            raise GraphOfGroupsError("spanning tree repeats an edge")
        if len(self.spanning_tree) != len(groups) - 1:
            raise GraphOfGroupsError("spanning tree must have |V| - 1 edges")
        uf = _UnionFind()
        for i in self.spanning_tree:
            u, v = by_id[i].ends
            if not uf.union(u, v):
                raise GraphOfGroupsError(f"spanning tree contains a cycle (edge {i})")

    def to_dict(self) -> dict:
        def words(m):
            return {x: [[g, k] for g, k in w.syllables] for x, w in m.items()}

        return {
            "vertices": {v: grp.to_dict() for v, grp in self.vertices},
            "edges": [
                {"id": e.id, "ends": list(e.ends), "group": e.group.to_dict(), "d0": words(e.d0), "d1": words(e.d1)}
                for e in self.edges
            ],
            "spanning_tree": list(self.spanning_tree),
        }


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def graph_of_groups_from_dict(data, p: int | None = None) -> GraphOfGroups:
    try:
        verts = tuple((str(v), presentation_from_dict(grp, p)) for v, grp in data["vertices"].items())
        edges = []
        for e in data.get("edges", []):
            group = presentation_from_dict(e["group"], p)
            d0 = {x: word_from_json(w, p) for x, w in e.get("d0", {}).items()}
            d1 = {x: word_from_json(w, p) for x, w in e.get("d1", {}).items()}
            u, v = e["ends"]
            edges.append(GogEdge(str(e["id"]), (u, v), group, d0, d1))
        tree = tuple(str(i) for i in data.get("spanning_tree", []))
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        if isinstance(exc, PresentationError):
            raise
        raise GraphOfGroupsError(f"malformed graph-of-groups JSON: {exc}") from None
    return GraphOfGroups(verts, tuple(edges), tree)


def parse_graph_of_groups(text: str, p: int | None = None) -> GraphOfGroups:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphOfGroupsError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return graph_of_groups_from_dict(data, p)


def fundamental_presentation(gog: GraphOfGroups) -> GroupPresentation:
    """Presentation of the fundamental group relative to the given maximal subtree.

    Generators are the vertex-group generators plus a stable letter per
    edge outside the tree. Each edge generator x contributes the relation
    d0(x) = t d1(x) t^-1, written as the relator t^-1 d0(x) t d1(x)^-1, with
    t = 1 on tree edges. Where a tree edge sends x to single generators on
    both sides the relation is used at once to identify them (a Tietze
    move), so shared generators keep one name. A name is the plain label
    unless two surviving generators would share it, in which case it
    becomes ``vertex.label``.
    """
    gog.validate()
    vorder = {v: i for i, (v, _) in enumerate(gog.vertices)}
    uf = _UnionFind()
    nodes = [(v, x) for v, grp in gog.vertices for x in grp.generators]
    for node in nodes:
        uf.find(node)
    tree = set(gog.spanning_tree)
    pending = []  # (edge, x) relations not absorbed by identification
    for e in gog.edges:
        for x in e.group.generators:
            a, b = e.d0[x].syllables, e.d1[x].syllables
            if e.id in tree and len(a) == 1 and len(b) == 1 and a[0][1] == 1 and b[0][1] == 1:
                uf.union((e.ends[0], a[0][0]), (e.ends[1], b[0][0]))
            else:
                pending.append((e, x))

    classes: dict = {}
    for node in nodes:
        classes.setdefault(uf.find(node), []).append(node)
    reps = sorted(
        (min(members, key=lambda n: (vorder[n[0]], _gen_index(gog, n))) for members in classes.values()),
        key=lambda n: (vorder[n[0]], _gen_index(gog, n)),
    )
    label_count: dict[str, int] = {}
    for _, x in reps:
        label_count[x] = label_count.get(x, 0) + 1
    rep_name = {rep: (rep[1] if label_count[rep[1]] == 1 else f"{rep[0]}.{rep[1]}") for rep in reps}
    root_name = {uf.find(rep): name for rep, name in rep_name.items()}
    gens = [rep_name[r] for r in reps]

    stable = {}
    for e in gog.edges:
        if e.id not in tree:
            name = e.id if e.id not in gens else f"{e.id}.t"
            stable[e.id] = name
            gens.append(name)
    if len(set(gens)) != len(gens):
        raise GraphOfGroupsError(f"generator names collide: {gens}")

    def rename(v: str, w: Word) -> Word:
        return Word(tuple((root_name[uf.find((v, x))], k) for x, k in w.syllables))

    rels = []
    for v, grp in gog.vertices:
        rels.extend(rename(v, r) for r in grp.relators)
    for e, x in pending:
        left, right = rename(e.ends[0], e.d0[x]), rename(e.ends[1], e.d1[x])
        if e.id in tree:
            rels.append(left * right.inverse())
        else:
            t = Word.gen(stable[e.id])
            rels.append(t.inverse() * left * t * right.inverse())
    return GroupPresentation(tuple(gens), _dedupe([r for r in rels if r]))


def _gen_index(gog: GraphOfGroups, node) -> int:
    return gog.vertex_group(node[0]).generators.index(node[1])


# --- clique-separator decomposition ---------------------------------------------------


@dataclass(frozen=True)
class CompleteLeaf:
    cover: tuple[str, ...]


@dataclass(frozen=True)
class Amalgam:
    left: "DecompositionTree"
    right: "DecompositionTree"
    separator: tuple[str, ...]
    cover: tuple[str, ...]


DecompositionTree = Union[CompleteLeaf, Amalgam]


def dirac_decompose(g: SimplicialGraph, cap: int = DEFAULT_CLIQUE_CAP) -> DecompositionTree:
    """Split a chordal graph along minimum clique separators until every piece is complete.

    At each step the separator is the first complete vertex set, by size and
    then lexicographically, whose removal disconnects the current piece. The
    left side is the component containing the least remaining vertex plus
    the separator; the right side is everything else.
    """
    cert = chordality(g)
    if not cert.chordal:
        raise NotChordalError(cert)
    cliques = sorted(enumerate_cliques(g, cap=cap).cliques, key=lambda c: (len(c), [g.position(v) for v in c]))
    return _split(g, tuple(g.vertices), cliques)


def _split(g: SimplicialGraph, cover: tuple[str, ...], cliques) -> DecompositionTree:
    if g.is_complete(cover):
        return CompleteLeaf(cover)
    members = set(cover)
    for sep in cliques:
        if not members.issuperset(sep):
            continue
        comps = connected_components(g, within=members - set(sep))
        if len(comps) < 2:
            continue
        left = g.ordered(set(comps[0]) | set(sep))
        right = g.ordered(members - set(comps[0]))
        return Amalgam(_split(g, left, cliques), _split(g, right, cliques), tuple(sep), cover)
    raise AssertionError("non-complete chordal graph without clique separator")  # pragma: no cover


def decomposition_leaves(t: DecompositionTree) -> list[CompleteLeaf]:
    if isinstance(t, CompleteLeaf):
        return [t]
    return decomposition_leaves(t.left) + decomposition_leaves(t.right)


def decomposition_to_dict(t: DecompositionTree) -> dict:
    if isinstance(t, CompleteLeaf):
        return {"kind": "CompleteLeaf", "cover": list(t.cover)}
    return {
        "kind": "Amalgam",
        "separator": list(t.separator),
        "cover": list(t.cover),
        "left": decomposition_to_dict(t.left),
        "right": decomposition_to_dict(t.right),
    }


def render_decomposition(t: DecompositionTree) -> str:
    if isinstance(t, CompleteLeaf):
        return "{" + ",".join(t.cover) + "}"
    return f"({render_decomposition(t.left)} *_{{{','.join(t.separator)}}} {render_decomposition(t.right)})"


def check_decomposition(g: SimplicialGraph, t: DecompositionTree) -> bool:
    """Invariants of a clique-separator tree, and that its leaves cover every edge."""
    if set(t.cover) != set(g.vertices):
        return False
    leaves = decomposition_leaves(t)
    covered = {frozenset(e) for leaf in leaves for e in itertools.combinations(leaf.cover, 2)}
    if any(frozenset(e) not in covered for e in g.edges):
        return False
    return _check_node(g, t)


def _check_node(g: SimplicialGraph, t: DecompositionTree) -> bool:
    if isinstance(t, CompleteLeaf):
        return g.is_complete(t.cover)
    lc, rc, node = set(t.left.cover), set(t.right.cover), set(t.cover)
    return (
        set(t.separator) == lc & rc
        and g.is_complete(t.separator)
        and lc | rc == node
        and lc < node
        and rc < node
        and _check_node(g, t.left)
        and _check_node(g, t.right)
    )


def raag_graph_of_groups(g: SimplicialGraph, cap: int = DEFAULT_CLIQUE_CAP) -> GraphOfGroups:
    """The tree of free abelian groups read off a clique-separator decomposition.

    Vertices are the complete pieces, and each amalgamation becomes a tree
    edge carrying the free abelian group on its separator, attached to a
    piece on either side that contains the separator.
    """
    t = dirac_decompose(g, cap=cap)
    leaves = decomposition_leaves(t)
    names = {leaf: f"Q{i}" for i, leaf in enumerate(leaves)}
    edges = []

    def holder(sub: DecompositionTree, sep) -> str:
        return next(names[leaf] for leaf in decomposition_leaves(sub) if set(sep) <= set(leaf.cover))

    def walk(node: DecompositionTree) -> None:
        if isinstance(node, CompleteLeaf):
            return
        sep = node.separator
        group = raag_presentation(induced_subgraph(g, sep))
        ident = {x: Word.gen(x) for x in sep}
        edges.append(GogEdge(f"e{len(edges)}", (holder(node.left, sep), holder(node.right, sep)), group, ident, ident))
        walk(node.left)
        walk(node.right)

    walk(t)
    verts = tuple((names[leaf], raag_presentation(induced_subgraph(g, leaf.cover))) for leaf in leaves)
    return GraphOfGroups(verts, tuple(edges), tuple(e.id for e in edges))


# --- kernels of the exponent-sum map on trees -------------------------------------------


@dataclass(frozen=True)
class TreeKernelRank:
    """Rank of the kernel of the exponent-sum map G_T -> Z_p for a tree T.

    ``trace`` lists (pending vertex, its neighbour) in removal order; each
    removal adds a free factor generated by ``pending * neighbour^-1``.
    """

    rank: int
    trace: tuple[tuple[str, str], ...]

    def basis(self) -> list[Word]:
        return [Word.of(v, (w, -1)) for v, w in self.trace]

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "trace": [{"pending": v, "neighbor": w} for v, w in self.trace],
            "basis": [[[g, k] for g, k in b.syllables] for b in self.basis()],
        }


def is_tree(g: SimplicialGraph) -> bool:
    return len(g) > 0 and len(g.edges) == len(g) - 1 and len(connected_components(g)) == 1


def tree_kernel_rank(t: SimplicialGraph) -> TreeKernelRank:
    if not is_tree(t):
        raise GraphError("tree_kernel_rank needs a tree (connected, |E| = |V| - 1)")
    alive = set(t.vertices)
    trace = []
    while len(alive) > 1:
        v = next(u for u in t.vertices if u in alive and len(t.neighbors(u) & alive) == 1)
        (w,) = t.neighbors(v) & alive
        trace.append((v, w))
        alive.remove(v)
    return TreeKernelRank(len(trace), tuple(trace))
