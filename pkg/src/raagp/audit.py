"""Cross-checks of the certifying algorithms against brute force, for whole graph families."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor

from . import bruteforce
from .classification import build_construction_tree, check_construction_tree, classify
from .graph import SimplicialGraph, connected_components
from .recognition import (
    ForbiddenCertificate,
    check_chordality_certificate,
    check_forbidden_certificate,
    chordality,
    find_dominating_vertex,
    find_induced_path4,
    find_induced_square,
)
from .snf import smith_normal_form, verify_smith_form


def audit_graph(g: SimplicialGraph) -> list[str]:
    """Everything that disagrees with brute force on ``g``; empty when all is well."""
    problems = []
    squares, paths = bruteforce.induced_square_sets(g), bruteforce.induced_path4_sets(g)
    for kind, found, sets in (("square", find_induced_square(g), squares), ("path4", find_induced_path4(g), paths)):
        if (found is None) != (not sets):
            problems.append(f"{kind} search disagrees with brute force")
        elif found is not None:
            if not check_forbidden_certificate(g, found):
                problems.append(f"{kind} certificate does not re-validate")
            if g.ordered(found.witness) != sets[0]:
                problems.append(f"{kind} witness is not the least 4-set")
    witness = bool(squares or paths)

    cert = chordality(g)
    if cert.chordal == bruteforce.has_chordless_cycle(g):
        problems.append("chordality verdict disagrees with brute force")
    if not check_chordality_certificate(g, cert):
        problems.append("chordality certificate does not re-validate")

    if g.vertices:
        tree = build_construction_tree(g)
        if isinstance(tree, ForbiddenCertificate):
            if not witness:
                problems.append("construction failed on a forbidden-free graph")
            if not check_forbidden_certificate(g, tree):
                problems.append("construction returned an invalid certificate")
        else:
            if witness:
                problems.append("construction succeeded despite a forbidden subgraph")
            if not check_construction_tree(g, tree):
                problems.append("construction tree invariants fail")
        if len(connected_components(g)) == 1 and find_dominating_vertex(g) is None and not witness:
            problems.append("connected, no dominating vertex, yet no C4/P4")
    if not classify(g).validate():
        problems.append("classification report does not re-validate")
    return problems


def _audit_masks(args) -> tuple[int, list[tuple[SimplicialGraph, list[str]]]]:
    n, lo, hi = args
    verts = tuple(f"v{i}" for i in range(n))
    pairs = list(itertools.combinations(verts, 2))
    bad = []
    for mask in range(lo, hi):
        g = SimplicialGraph(verts, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        issues = audit_graph(g)
        if issues:
            bad.append((g, issues))
    return hi - lo, bad


def audit_all_graphs(n: int, jobs: int = 1) -> tuple[int, list[tuple[SimplicialGraph, list[str]]]]:
    """Audit every labelled graph on ``n`` vertices; returns (graphs checked, failures)."""
    total = 1 << (n * (n - 1) // 2)
    chunks = max(1, jobs * 4)
    bounds = [(n, total * i // chunks, total * (i + 1) // chunks) for i in range(chunks)]
    if jobs <= 1:
        results = map(_audit_masks, bounds)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_audit_masks, bounds))
    count, failures = 0, []
    for c, bad in results:
        count += c
        failures.extend(bad)
    return count, failures


def random_matrix(rng: random.Random, max_dim: int = 8, bound: int = 20) -> list[list[int]]:
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def audit_smith_forms(count: int, seed: int = 0, max_dim: int = 8, bound: int = 20) -> list[list[list[int]]]:
    """Random integer matrices whose Smith form fails verification."""
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        m = random_matrix(rng, max_dim, bound)
        if not verify_smith_form(m, smith_normal_form(m)):
            bad.append(m)
    return bad
