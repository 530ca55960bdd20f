"""Finite simplicial graphs: representation, parsing, rendering, basic queries."""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_CLIQUE_CAP = 64

_LABEL = re.compile(r"[A-Za-z0-9_]+")


class GraphError(ValueError):
    """Invalid graph data (loops, duplicate edges, unknown vertices)."""


class GraphFormatError(GraphError):
    """Syntax error in a textual graph, with 1-based line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CliqueLimitError(GraphError):
    pass


@dataclass(frozen=True)
class SimplicialGraph:
    """An immutable finite simplicial graph.

    ``vertices`` fixes the global vertex order used by every deterministic
    choice in the package. ``edges`` holds each edge once as a pair ordered
    by that global order, and the tuple of edges is itself sorted.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        index: dict[str, int] = {}
        for v in verts:
            if not isinstance(v, str) or not v:
                raise GraphError(f"vertex labels must be non-empty strings, got {v!r}")
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        normalized = []
        for e in self.edges:
            u, v = e
            for w in (u, v):
                if w not in index:
                    raise GraphError(f"edge {u}-{v} references undeclared vertex {w!r}")
            if u == v:
                raise GraphError(f"loop edge at {u!r}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
            normalized.append((u, v) if index[u] < index[v] else (v, u))
        normalized.sort(key=lambda e: (index[e[0]], index[e[1]]))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Iterable[str] = ()) -> "SimplicialGraph":
        """Build a graph, declaring ``vertices`` first and then edge endpoints in order."""
        edges = [tuple(e) for e in edges]
        order = list(dict.fromkeys(itertools.chain(vertices, itertools.chain.from_iterable(edges))))
        return cls(tuple(order), tuple(edges))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._adj[u]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def position(self, v: str) -> int:
        """Index of ``v`` in the global vertex order."""
        return self._index[v]

    def ordered(self, vs: Iterable[str]) -> tuple[str, ...]:
        """Sort labels by the global vertex order."""
        return tuple(sorted(vs, key=self._index.__getitem__))

    def is_complete(self, vs: Iterable[str] | None = None) -> bool:
        vs = self.vertices if vs is None else list(vs)
        return all(self.adjacent(u, v) for u, v in itertools.combinations(vs, 2))

    def bitmasks(self) -> list[int]:
        """Adjacency as one integer bitmask per vertex (bit i = vertex i)."""
        idx = self._index
        return [sum(1 << idx[w] for w in self._adj[v]) for v in self.vertices]


def induced_subgraph(g: SimplicialGraph, s: Iterable[str]) -> SimplicialGraph:
    s = list(s)
    unknown = [v for v in s if v not in g]
    if unknown:
        raise GraphError(f"unknown vertices {unknown}")
    keep = set(s)
    return SimplicialGraph(g.ordered(keep), tuple(e for e in g.edges if e[0] in keep and e[1] in keep))


def remove_vertex(g: SimplicialGraph, v: str) -> SimplicialGraph:
    return induced_subgraph(g, [w for w in g.vertices if w != v])


def connected_components(g: SimplicialGraph, within: Iterable[str] | None = None) -> list[tuple[str, ...]]:
    """Vertex sets of the connected components, each in vertex order, sorted by least member.

    With ``within`` the components are those of the induced subgraph on it.
    """
    allowed = set(g.vertices if within is None else within)
    seen: set[str] = set()
    comps = []
    for start in g.vertices:
        if start not in allowed or start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(g.ordered(comp))
    return comps


def is_connected(g: SimplicialGraph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class CliqueCensus:
    counts: dict[int, int]
    cliques: tuple[tuple[str, ...], ...]


def maximal_cliques(g: SimplicialGraph) -> list[tuple[str, ...]]:
    """Bron-Kerbosch with Tomita pivoting; cliques in vertex order, sorted."""
    out: list[tuple[str, ...]] = []

    def expand(r: list[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            out.append(g.ordered(r))
            return
        pivot = max(p | x, key=lambda u: (len(g.neighbors(u) & p), -g.position(u)))
        for v in g.ordered(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            expand(r + [v], p & nv, x & nv)
            p.discard(v)
            x.add(v)

    if g.vertices:
        expand([], set(g.vertices), set())
    return sorted(out, key=lambda c: [g.position(v) for v in c])


def enumerate_cliques(g: SimplicialGraph, cap: int = DEFAULT_CLIQUE_CAP) -> CliqueCensus:
    """Every complete vertex subset, the empty one included.

    Maximal cliques come from Bron-Kerbosch and are expanded downward. The
    result lists cliques lexicographically by vertex position.
    """
    if len(g) > cap:
        raise CliqueLimitError(f"graph has {len(g)} vertices, clique enumeration cap is {cap}")
    found: set[tuple[str, ...]] = {()}
    for m in maximal_cliques(g):
        for k in range(1, len(m) + 1):
            found.update(itertools.combinations(m, k))
    cliques = sorted(found, key=lambda c: [g.position(v) for v in c])
    counts: dict[int, int] = {}
    for c in cliques:
        counts[len(c)] = counts.get(len(c), 0) + 1
    return CliqueCensus(dict(sorted(counts.items())), tuple(cliques))


# --- text formats -----------------------------------------------------------


def parse_graph(text: str, format: str = "edge_list") -> SimplicialGraph:
    if format in ("edge_list", "edge"):
        return _parse_edge_list(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown graph format {format!r}")


def _parse_edge_list(text: str) -> SimplicialGraph:
    order: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    seen: dict[frozenset, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = line.index(stripped[0]) + 1
        parts = stripped.split("-")
        if len(parts) > 2:
            raise GraphFormatError("expected 'label' or 'label-label'", lineno, col)
        offset = col
        labels = []
        for part in parts:
            label = part.strip()
            if not _LABEL.fullmatch(label):
                where = offset + (len(part) - len(part.lstrip()))
                raise GraphFormatError(f"invalid vertex label {label!r}", lineno, where)
            labels.append(label)
            offset += len(part) + 1
        for label in labels:
            order.setdefault(label, None)
        if len(labels) == 2:
            u, v = labels
            if u == v:
                raise GraphFormatError(f"loop edge at {u!r}", lineno, col)
            key = frozenset(labels)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {u}-{v} (first on line {seen[key]})", lineno, col)
            seen[key] = lineno
            edges.append((u, v))
    return SimplicialGraph(tuple(order), tuple(edges))


def _parse_json(text: str) -> SimplicialGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, exc.lineno, exc.colno) from None
    return graph_from_dict(data)


def graph_from_dict(data) -> SimplicialGraph:
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise GraphError('graph JSON must be an object with a "vertices" array')
    edges = data.get("edges", [])
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e) for e in edges
    ):
        raise GraphError('"edges" must be an array of 2-element string arrays')
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge at {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {u}-{v}")
        seen.add(key)
    return SimplicialGraph(tuple(data["vertices"]), tuple((u, v) for u, v in edges))


def graph_to_dict(g: SimplicialGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def render_graph(g: SimplicialGraph, format: str = "edge_list") -> str:
    """Serialize ``g``; the output is byte-stable and parses back to ``g``."""
    if format == "json":
        return json.dumps(graph_to_dict(g), separators=(",", ":")) + "\n"
    if format not in ("edge_list", "edge"):
        raise ValueError(f"unknown graph format {format!r}")
    # declare every vertex up front so first-appearance order survives
    lines = list(g.vertices) + [f"{u}-{v}" for u, v in g.edges]
    return "".join(line + "\n" for line in lines)


# --- small named graphs, handy in tests and fixtures -------------------------


def path_graph(labels: Sequence[str]) -> SimplicialGraph:
    return SimplicialGraph.from_edges(zip(labels, labels[1:]), labels)


def cycle_graph(labels: Sequence[str]) -> SimplicialGraph:
    return SimplicialGraph.from_edges(zip(labels, list(labels[1:]) + [labels[0]]), labels)


def complete_graph(labels: Sequence[str]) -> SimplicialGraph:
    return SimplicialGraph.from_edges(itertools.combinations(labels, 2), labels)


def disjoint_union(g: SimplicialGraph, h: SimplicialGraph) -> SimplicialGraph:
    if set(g.vertices) & set(h.vertices):
        raise GraphError("disjoint_union needs disjoint vertex labels")
    return SimplicialGraph(g.vertices + h.vertices, g.edges + h.edges)


def cone(g: SimplicialGraph, apex: str) -> SimplicialGraph:
    """Join a new vertex ``apex`` to every vertex of ``g``."""
    if apex in g:
        raise GraphError(f"apex {apex!r} already in graph")
    return SimplicialGraph((apex,) + g.vertices, g.edges + tuple((apex, v) for v in g.vertices))
