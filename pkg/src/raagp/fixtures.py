"""Bundled fixtures around G_{L3} = <x, y, z, w | [x,y], [y,z], [z,w]>, and checks that replay them.

The chain of subgroups is G > U > H > V:

* U is the kernel of f: G -> C_p with f(x) = 1, f(w) = -1, f(y) = f(z) = 0.
  Besides the Reidemeister-Schreier route, U is given directly as a graph of
  groups (:func:`u_graph_of_groups`) with generators X = x^p, W = w^p, y, z,
  z_i = z^(x^i) and stable letters t_i (1 <= i < p). Here t_i is taken to
  be w^i x^i; writing it as x^i w^i instead changes neither the graph of
  groups nor any abelian invariant.
* H = <y, z, z', t | [y,z], [y,z'], z^t z'^-1> with z' = z^x and t = wx,
  an HNN extension of <y> x F(z, z') (``H.json``, ``H_gog.json``).
* V = <a, b, c, t | [a,b], [a,c], t^-1 b^p a^-1 t a c^-p> with a = y^p,
  b = yz, c = yz', an HNN extension of V1 = <a> x F(b, c) (``V.json``,
  ``V_hnn.json``). The exponents written ``"p"`` are filled in at load time.

V is also the kernel of the character on H sending y to 1, z and z' to -1
and t to 0, which gives a second, independent route to its abelianization.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable

from .classification import classify, consumed_vertices
from .graph import SimplicialGraph, complete_graph, graph_from_dict
from .graphs_of_groups import (
    GogEdge,
    GraphOfGroups,
    fundamental_presentation,
    graph_of_groups_from_dict,
    raag_graph_of_groups,
)
from .presentations import (
    AbelianInvariants,
    GroupPresentation,
    ModPCharacter,
    Word,
    commutator,
    presentation_from_dict,
    pro_p_abelian_invariants,
    raag_presentation,
    tietze_cleanup,
)
from .recognition import check_chordality_certificate, chordality
from .schreier import reidemeister_schreier

FIXTURE_NAMES = ("L3", "C4", "K3", "P3", "kite", "H", "V", "L3_gog", "H_gog", "V_hnn")


def fixture_text(name: str) -> str:
    return resources.files("raagp").joinpath("data", f"{name}.json").read_text(encoding="utf-8")


def fixture_path(name: str):
    return resources.files("raagp").joinpath("data", name)


def load_graph(name: str) -> SimplicialGraph:
    return graph_from_dict(json.loads(fixture_text(name)))


def load_presentation(name: str, p: int | None = None) -> GroupPresentation:
    return presentation_from_dict(json.loads(fixture_text(name)), p)


def load_graph_of_groups(name: str, p: int | None = None) -> GraphOfGroups:
    return graph_of_groups_from_dict(json.loads(fixture_text(name)), p)


def l3_character(p: int) -> ModPCharacter:
    """f(x) = 1, f(w) = p - 1, f(y) = f(z) = 0."""
    return ModPCharacter(p, {"x": 1, "y": 0, "z": 0, "w": p - 1})


def h_character(p: int) -> ModPCharacter:
    """The character on H whose kernel is V."""
    return ModPCharacter(p, {"y": 1, "z": p - 1, "z'": p - 1, "t": 0})


def _group(gens: list[str], rels: Iterable[Word] = ()) -> GroupPresentation:
    return GroupPresentation(tuple(gens), tuple(rels))


def u_graph_of_groups(p: int) -> GraphOfGroups:
    """ker(f) as a graph of groups with p + 2 vertices and 2p edges."""
    ident = lambda g: {g: Word.gen(g)}  # noqa: E731
    verts = [
        ("A", _group(["X", "y"], [commutator("X", "y")])),
        ("B", _group(["y", "z"], [commutator("y", "z")])),
        ("C", _group(["z", "W"], [commutator("z", "W")])),
    ]
    edges = [
        GogEdge("a", ("A", "B"), _group(["y"]), ident("y"), ident("y")),
        GogEdge("b", ("B", "C"), _group(["z"]), ident("z"), ident("z")),
    ]
    for i in range(1, p):
        zi = f"z{i}"
        verts.append((f"D{i}", _group(["y", zi], [commutator("y", zi)])))
        edges.append(GogEdge(f"c{i}", ("A", f"D{i}"), _group(["y"]), ident("y"), ident("y")))
    for i in range(1, p):
        # z = t_i z_i t_i^-1, i.e. z_i = z^(t_i)
        edges.append(GogEdge(f"t{i}", ("C", f"D{i}"), _group(["s"]), {"s": Word.gen("z")}, {"s": Word.gen(f"z{i}")}))
    tree = ("a", "b") + tuple(f"c{i}" for i in range(1, p))
    return GraphOfGroups(tuple(verts), tuple(edges), tree)


def u_by_rewriting(p: int) -> GroupPresentation:
    return tietze_cleanup(reidemeister_schreier(raag_presentation(load_graph("L3")), l3_character(p)))


# --- replayable checks -------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported not raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(ok), detail)


def reference_checks(primes: Iterable[int] = (2, 3, 5, 7)) -> list[CheckResult]:
    primes = tuple(primes)
    out = []

    for p in primes:
        def v_direct(p=p):
            start = time.perf_counter()
            inv = pro_p_abelian_invariants(load_presentation("V", p), p)
            ms = (time.perf_counter() - start) * 1e3
            return inv == AbelianInvariants(p, 3, (1,)), f"{inv} ({ms:.3f} ms)"

        def v_hnn(p=p):
            got = fundamental_presentation(load_graph_of_groups("V_hnn", p))
            return got == load_presentation("V", p), str(got)

        def v_kernel(p=p):
            inv = pro_p_abelian_invariants(reidemeister_schreier(load_presentation("H"), h_character(p)), p)
            return inv == AbelianInvariants(p, 3, (1,)), str(inv)

        def u_match(p=p):
            rs = u_by_rewriting(p)
            gog = fundamental_presentation(u_graph_of_groups(p))
            a, b = pro_p_abelian_invariants(rs, p), pro_p_abelian_invariants(gog, p)
            ok = a == b and len(rs.generators) == len(gog.generators) == 2 * p + 2
            return ok, f"rewriting {a} with {len(rs.generators)} generators; graph of groups {b} with {len(gog.generators)}"

        out += [
            _run(f"V abelianization is Z_p^3 + C_p (p={p})", v_direct),
            _run(f"HNN graph of groups presents V (p={p})", v_hnn),
            _run(f"kernel of the character on H has abelianization Z_p^3 + C_p (p={p})", v_kernel),
            _run(f"index-p kernel U of G_L3: rewriting agrees with graph of groups (p={p})", u_match),
        ]

    def h_gog():
        got = fundamental_presentation(load_graph_of_groups("H_gog"))
        return got == load_presentation("H"), str(got)

    def l3_gog():
        want = raag_presentation(load_graph("L3"))
        a = fundamental_presentation(load_graph_of_groups("L3_gog"))
        b = fundamental_presentation(raag_graph_of_groups(load_graph("L3")))
        return a == want and set(b.relators) == set(want.relators) and b.generators == want.generators, str(a)

    def l3_verdict():
        r = classify(load_graph("L3"))
        c = r.forbidden_cert
        ok = (
            not r.elementary_type
            and c is not None
            and c.kind == "path4"
            and c.witness == ("x", "y", "z", "w")
            and r.coherent
            and not r.universally_koszul
            and r.validate()
        )
        return ok, f"verdict {r.verdict}, witness {c and c.witness}, coherent {r.coherent}"

    def c4_verdict():
        r = classify(load_graph("C4"))
        c = r.forbidden_cert
        ok = not r.elementary_type and c is not None and c.kind == "square" and not r.coherent and r.validate()
        return ok, f"verdict {r.verdict}, witness {c and c.witness}, chordless cycle {r.chordality_cert.chordless_cycle}"

    def complete_verdicts():
        sizes = []
        for n in range(1, 7):
            g = complete_graph([f"v{i}" for i in range(n)])
            r = classify(g)
            if not (r.elementary_type and r.coherent and r.validate() and len(consumed_vertices(r.construction)) == n):
                return False, f"K{n} failed"
            sizes.append(r.expression)
        return True, f"K1..K6 elementary type, K3 = {classify(load_graph('K3')).expression}"

    def chordal_verdicts():
        checks = {name: chordality(load_graph(name)) for name in ("C4", "L3", "kite")}
        ok = (
            not checks["C4"].chordal
            and checks["L3"].chordal
            and checks["kite"].chordal
            and all(check_chordality_certificate(load_graph(n), c) for n, c in checks.items())
        )
        return ok, ", ".join(f"{n}: {c.verdict}" for n, c in checks.items())

    out += [
        _run("graph of groups for H presents H", h_gog),
        _run("graph of groups for L3 presents G_L3", l3_gog),
        _run("L3 is coherent but not of elementary type", l3_verdict),
        _run("C4 is neither coherent nor of elementary type", c4_verdict),
        _run("complete graphs K1..K6 are of elementary type", complete_verdicts),
        _run("chordality of C4, L3 and the kite", chordal_verdicts),
    ]
    return out
