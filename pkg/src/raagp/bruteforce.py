"""Exhaustive reference searches, deliberately naive.

These share no code with the certifying algorithms beyond the graph type,
so agreement between the two is meaningful.
"""

from __future__ import annotations

import itertools

from .graph import SimplicialGraph


def _edges_within(g: SimplicialGraph, vs) -> set[frozenset]:
    return {frozenset(p) for p in itertools.combinations(vs, 2) if g.adjacent(*p)}


def _is_cycle(g: SimplicialGraph, vs) -> bool:
    """The induced subgraph on ``vs`` is a single cycle through all of ``vs``."""
    edges = _edges_within(g, vs)
    if len(edges) != len(vs):
        return False
    if any(sum(v in e for e in edges) != 2 for v in vs):
        return False
    # 2-regular and connected means one cycle
    seen, stack = {vs[0]}, [vs[0]]
    while stack:
        v = stack.pop()
        for e in edges:
            if v in e:
                (w,) = e - {v}
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == len(vs)


def induced_square_sets(g: SimplicialGraph) -> list[tuple[str, ...]]:
    return [q for q in itertools.combinations(g.vertices, 4) if _is_cycle(g, q)]


def induced_path4_sets(g: SimplicialGraph) -> list[tuple[str, ...]]:
    out = []
    for q in itertools.combinations(g.vertices, 4):
        edges = _edges_within(g, q)
        if len(edges) != 3:
            continue
        for perm in itertools.permutations(q):
            if edges == {frozenset(p) for p in zip(perm, perm[1:])}:
                out.append(q)
                break
    return out


def has_chordless_cycle(g: SimplicialGraph) -> bool:
    return any(
        _is_cycle(g, vs) for k in range(4, len(g) + 1) for vs in itertools.combinations(g.vertices, k)
    )


def has_perfect_elimination_order(g: SimplicialGraph) -> bool:
    """Try every vertex ordering; only for tiny graphs."""
    for order in itertools.permutations(g.vertices):
        if all(
            all(g.adjacent(a, b) for a, b in itertools.combinations([w for w in order[i + 1:] if g.adjacent(v, w)], 2))
            for i, v in enumerate(order)
        ):
            return True
    return False


def clique_counts(g: SimplicialGraph) -> dict[int, int]:
    counts: dict[int, int] = {}
    for k in range(len(g) + 1):
        c = sum(1 for vs in itertools.combinations(g.vertices, k) if g.is_complete(vs))
        if c:
            counts[k] = c
    return counts


def all_graphs(n: int):
    """Every labelled simplicial graph on vertices v0..v{n-1}."""
    verts = tuple(f"v{i}" for i in range(n))
    pairs = list(itertools.combinations(verts, 2))
    for mask in range(1 << len(pairs)):
        yield SimplicialGraph(verts, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
