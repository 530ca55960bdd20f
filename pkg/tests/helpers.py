"""Graph generators and hypothesis strategies shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from raagp.graph import SimplicialGraph


def random_graph(rng: random.Random, max_vertices: int = 12) -> SimplicialGraph:
    n = rng.randint(0, max_vertices)
    density = rng.random()
    verts = [f"v{i}" for i in range(n)]
    edges = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return SimplicialGraph(tuple(verts), tuple(edges))


def random_chordal_graph(rng: random.Random, max_vertices: int = 10) -> SimplicialGraph:
    """Add vertices one at a time, each joined to a clique of the graph so far.

    Read backwards, the insertion order is a perfect elimination ordering.
    """
    n = rng.randint(1, max_vertices)
    verts: list[str] = []
    adj: dict[str, set[str]] = {}
    edges = []
    for i in range(n):
        v = f"v{i}"
        nbrs: list[str] = []
        if verts and rng.random() < 0.85:
            u = rng.choice(verts)
            nbrs = [u]
            pool = list(adj[u])
            rng.shuffle(pool)
            for w in pool:
                if rng.random() < 0.6 and all(w in adj[x] for x in nbrs):
                    nbrs.append(w)
        adj[v] = set(nbrs)
        for w in nbrs:
            adj[w].add(v)
            edges.append((w, v))
        verts.append(v)
    return SimplicialGraph(tuple(verts), tuple(edges))


@st.composite
def graphs(draw, max_vertices: int = 7, min_vertices: int = 0) -> SimplicialGraph:
    n = draw(st.integers(min_vertices, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    pairs = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimplicialGraph(tuple(verts), tuple(p for p, k in zip(pairs, keep) if k))


@st.composite
def chordal_graphs(draw, max_vertices: int = 9) -> SimplicialGraph:
    return random_chordal_graph(random.Random(draw(st.integers(0, 2**32))), max_vertices)


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)
