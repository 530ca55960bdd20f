"""Certifying recognition of {C4, P4}-free graphs and of chordal graphs.

Every positive answer carries a witness that can be re-checked without
trusting the search that produced it: an ordered 4-tuple inducing a square
or a path, a perfect elimination ordering, or a chordless cycle.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import GraphError, SimplicialGraph, connected_components, induced_subgraph

SQUARE = "square"
PATH4 = "path4"


@dataclass(frozen=True)
class ForbiddenCertificate:
    kind: str  # SQUARE or PATH4
    witness: tuple[str, str, str, str]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witness": list(self.witness)}


@dataclass(frozen=True)
class ChordalityCertificate:
    verdict: str  # "chordal" or "not_chordal"
    peo: Optional[tuple[str, ...]] = None
    chordless_cycle: Optional[tuple[str, ...]] = None

    @property
    def chordal(self) -> bool:
        return self.verdict == "chordal"

    def to_dict(self) -> dict:
        d: dict = {"verdict": self.verdict}
        if self.peo is not None:
            d["peo"] = list(self.peo)
        if self.chordless_cycle is not None:
            d["chordless_cycle"] = list(self.chordless_cycle)
        return d


# --- forbidden induced subgraphs ---------------------------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _search_four_sets(g: SimplicialGraph, want: str) -> Optional[ForbiddenCertificate]:
    n = len(g)
    if n < 4:
        return None
    adj = g.bitmasks()
    verts = g.vertices
    for a, b in itertools.combinations(range(n), 2):
        ab = ((adj[a] >> b) & 1)
        for c in range(b + 1, n):
            # three vertices of C4 or P4 always span at least one edge
            e3 = ab + ((adj[a] >> c) & 1) + ((adj[b] >> c) & 1)
            if e3 == 0 or e3 == 3:
                continue
            for d in range(c + 1, n):
                mask = (1 << a) | (1 << b) | (1 << c) | (1 << d)
                degs = [_popcount(adj[v] & mask) for v in (a, b, c, d)]
                if want == SQUARE:
                    if degs == [2, 2, 2, 2]:
                        return ForbiddenCertificate(SQUARE, _walk(verts, adj, (a, b, c, d), mask))
                elif sorted(degs) == [1, 1, 2, 2]:
                    return ForbiddenCertificate(PATH4, _walk(verts, adj, (a, b, c, d), mask))
    return None


def _walk(verts, adj, quad, mask) -> tuple:
    """Traverse an induced C4 or P4 from its least admissible start.

    For a path the start is the lesser endpoint; for a cycle it is the least
    vertex, stepping first to its lesser neighbour.
    """
    ends = [v for v in quad if _popcount(adj[v] & mask) == 1]
    order = [ends[0] if ends else quad[0]]
    while len(order) < 4:
        nxt = [w for w in quad if (adj[order[-1]] >> w) & 1 and w not in order]
        order.append(min(nxt))
    return tuple(verts[i] for i in order)


def find_induced_square(g: SimplicialGraph) -> Optional[ForbiddenCertificate]:
    return _search_four_sets(g, SQUARE)


def find_induced_path4(g: SimplicialGraph) -> Optional[ForbiddenCertificate]:
    return _search_four_sets(g, PATH4)


def find_forbidden(g: SimplicialGraph) -> Optional[ForbiddenCertificate]:
    """An induced square if there is one, else an induced P4, else None."""
    return find_induced_square(g) or find_induced_path4(g)


def find_dominating_vertex(g: SimplicialGraph) -> Optional[str]:
    if not g.vertices:
        raise GraphError("find_dominating_vertex needs a nonempty graph")
    if len(connected_components(g)) != 1:
        raise GraphError("find_dominating_vertex needs a connected graph")
    n = len(g)
    for v in g.vertices:
        if g.degree(v) == n - 1:
            return v
    return None


def check_forbidden_certificate(g: SimplicialGraph, cert: ForbiddenCertificate) -> bool:
    """Re-derive the induced subgraph on the witness and compare it to C4/P4 in the stated order."""
    w = cert.witness
    if len(w) != 4 or len(set(w)) != 4 or not all(v in g for v in w):
        return False
    h = induced_subgraph(g, w)
    steps = {frozenset(p) for p in zip(w, w[1:])}
    if cert.kind == SQUARE:
        steps.add(frozenset((w[3], w[0])))
    elif cert.kind != PATH4:
        return False
    return {frozenset(e) for e in h.edges} == steps


# --- chordality ---------------------------------------------------------------


def lex_bfs(g: SimplicialGraph) -> list[str]:
    """Lexicographic breadth-first search visit order.

    Partition refinement over an ordered list of cells; ties inside a cell
    are broken by the global vertex order, so the result is deterministic.
    """
    cells: list[list[str]] = [list(g.vertices)] if g.vertices else []
    order: list[str] = []
    while cells:
        first = cells[0]
        v = first.pop(0)
        if not first:
            cells.pop(0)
        order.append(v)
        nbrs = g.neighbors(v)
        refined = []
        for cell in cells:
            inside = [u for u in cell if u in nbrs]
            outside = [u for u in cell if u not in nbrs]
            refined.extend(part for part in (inside, outside) if part)
        cells = refined
    return order


def perfect_elimination_failure(g: SimplicialGraph, order) -> Optional[tuple[str, str, str]]:
    """First (v, a, b) where a, b are non-adjacent later neighbours of v, or None."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted((w for w in g.neighbors(v) if pos[w] > pos[v]), key=pos.__getitem__)
        for a, b in itertools.combinations(later, 2):
            if not g.adjacent(a, b):
                return v, a, b
    return None


def _shortest_path(g: SimplicialGraph, src: str, dst: str, allowed: set[str]) -> Optional[list[str]]:
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for w in g.ordered(g.neighbors(v)):
            if w in allowed and w not in prev:
                prev[w] = v
                queue.append(w)
    return None


def _cycle_through(g: SimplicialGraph, v: str, a: str, b: str) -> Optional[list[str]]:
    # interior vertices must avoid v's closed neighbourhood, so the only
    # cycle edges at v are va and vb and the shortest path has no chords
    allowed = (set(g.vertices) - g.neighbors(v) - {v}) | {a, b}
    path = _shortest_path(g, a, b, allowed)
    return None if path is None else [v] + path


def _canonical_cycle(g: SimplicialGraph, cycle: list[str]) -> tuple[str, ...]:
    k = min(range(len(cycle)), key=lambda i: g.position(cycle[i]))
    rot = cycle[k:] + cycle[:k]
    if g.position(rot[-1]) < g.position(rot[1]):
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def find_chordless_cycle(g: SimplicialGraph, hint: Optional[tuple[str, str, str]] = None) -> Optional[tuple[str, ...]]:
    """A chordless cycle of length at least 4, or None when ``g`` is chordal.

    ``hint`` is a (vertex, neighbour, neighbour) triple to try first,
    typically the perfect-elimination failure found by :func:`chordality`.
    """
    if hint is not None:
        cyc = _cycle_through(g, *hint)
        if cyc is not None:
            return _canonical_cycle(g, cyc)
    for v in g.vertices:
        for a, b in itertools.combinations(g.ordered(g.neighbors(v)), 2):
            if g.adjacent(a, b):
                continue
            cyc = _cycle_through(g, v, a, b)
            if cyc is not None:
                return _canonical_cycle(g, cyc)
    return None


def chordality(g: SimplicialGraph) -> ChordalityCertificate:
    peo = lex_bfs(g)[::-1]
    failure = perfect_elimination_failure(g, peo)
    if failure is None:
        return ChordalityCertificate("chordal", peo=tuple(peo))
    cycle = find_chordless_cycle(g, hint=failure)
    if cycle is None:  # pragma: no cover - would contradict LexBFS correctness
        raise AssertionError("PEO check failed but no chordless cycle exists")
    return ChordalityCertificate("not_chordal", chordless_cycle=cycle)


def check_chordality_certificate(g: SimplicialGraph, cert: ChordalityCertificate) -> bool:
    if cert.verdict == "chordal":
        if cert.peo is None or cert.chordless_cycle is not None:
            return False
        if sorted(cert.peo) != sorted(g.vertices) or len(set(cert.peo)) != len(g):
            return False
        return perfect_elimination_failure(g, cert.peo) is None
    if cert.verdict != "not_chordal" or cert.chordless_cycle is None or cert.peo is not None:
        return False
    return is_chordless_cycle(g, cert.chordless_cycle)


def is_chordless_cycle(g: SimplicialGraph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k or not all(v in g for v in cycle):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.adjacent(cycle[i], cycle[j]) != consecutive:
                return False
    return True
