"""raagp command-line interface.

    raagp <subcommand> [input] [--format edge|json] [-p PRIME] [--json] [--cap N] [--seed S]

Input comes from a file or stdin (``-``). A relative path ``fixtures/NAME``
that does not exist falls back to the fixture bundled with the package.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .audit import audit_all_graphs, audit_smith_forms
from .classification import ForbiddenCertificate, build_construction_tree, classify, render_expression, tree_to_dict
from .cohomology import cohomology_report
from .fixtures import fixture_path, reference_checks
from .graph import DEFAULT_CLIQUE_CAP, GraphError, SimplicialGraph, graph_from_dict, graph_to_dict, parse_graph
from .graphs_of_groups import (
    GraphOfGroupsError,
    NotChordalError,
    decomposition_to_dict,
    dirac_decompose,
    fundamental_presentation,
    graph_of_groups_from_dict,
    render_decomposition,
    tree_kernel_rank,
)
from .presentations import (
    GroupPresentation,
    ModPCharacter,
    PresentationError,
    character_from_dict,
    presentation_from_dict,
    pro_p_abelian_invariants,
    raag_presentation,
    require_prime,
    tietze_cleanup,
)
from .recognition import chordality
from .schreier import reidemeister_schreier, schreier_generators

DEFAULT_PRIME = 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, message: str, kind: str = "domain_error", **extra):
        super().__init__(message)
        self.kind = kind
        self.extra = extra


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- input handling -------------------------------------------------------------------


def _read_input(path: str, stdin) -> tuple[str, str]:
    if path == "-":
        return stdin.read(), "-"
    p = Path(path)
    if not p.exists() and p.parts[:1] == ("fixtures",) and len(p.parts) == 2:
        for candidate in (p.name, p.name + ".json"):
            bundled = fixture_path(candidate)
            if bundled.is_file():
                return bundled.read_text(encoding="utf-8"), bundled.name
    try:
        return p.read_text(encoding="utf-8"), path
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _is_json(text: str, name: str, fmt: str | None) -> bool:
    if fmt:
        return fmt == "json"
    return name.endswith(".json") or text.lstrip().startswith("{")


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}", "syntax_error") from None


def _graph(args, stdin) -> SimplicialGraph:
    text, name = _read_input(args.input, stdin)
    fmt = "json" if _is_json(text, name, args.format) else "edge_list"
    return parse_graph(text, fmt)


def _group(args, stdin, p: int | None) -> GroupPresentation:
    """A presentation, or the RAAG presentation when the input is a graph."""
    text, name = _read_input(args.input, stdin)
    if not _is_json(text, name, args.format):
        return raag_presentation(parse_graph(text, "edge_list"))
    data = _load_json(text)
    if isinstance(data, dict) and "generators" in data:
        return presentation_from_dict(data, p)
    return raag_presentation(graph_from_dict(data))


def _character(spec: str | None, pres: GroupPresentation, p: int) -> ModPCharacter:
    if spec is None:
        return ModPCharacter(p, {g: 1 for g in pres.generators})
    path = Path(spec)
    if spec.lstrip().startswith("{") or path.is_file():
        data = _load_json(spec if spec.lstrip().startswith("{") else path.read_text(encoding="utf-8"))
        chi = character_from_dict(data)
        if chi.p != p:
            raise DomainError(f"character is mod {chi.p} but -p is {p}")
        return chi
    assignments = {}
    for item in spec.split(","):
        gen, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad --chi entry {item!r}; expected gen=residue")
        try:
            assignments[gen.strip()] = int(value)
        except ValueError:
            raise UsageError(f"bad residue in --chi entry {item!r}") from None
    for g in pres.generators:
        assignments.setdefault(g, 0)
    return ModPCharacter(p, assignments)


# --- subcommands ------------------------------------------------------------------------------


def cmd_classify(args, stdin):
    report = classify(_graph(args, stdin))
    return report.to_json() if args.json else report.to_text()


def cmd_construct(args, stdin):
    out = build_construction_tree(_graph(args, stdin))
    if isinstance(out, ForbiddenCertificate):
        if args.json:
            return _dump({"verdict": "forbidden", "forbidden_cert": out.to_dict()})
        return f"not of elementary type: induced {out.kind} {' '.join(out.witness)}\n"
    if args.json:
        return _dump({"verdict": "elementary_type", "expression": render_expression(out), "construction": tree_to_dict(out)})
    return render_expression(out) + "\n"


def cmd_decompose(args, stdin):
    g = _graph(args, stdin)
    try:
        t = dirac_decompose(g, cap=args.cap)
    except NotChordalError as exc:
        raise DomainError(str(exc), "not_chordal", certificate=exc.certificate.to_dict()) from None
    return _dump(decomposition_to_dict(t)) if args.json else render_decomposition(t) + "\n"


def cmd_chordal(args, stdin):
    cert = chordality(_graph(args, stdin))
    if args.json:
        return _dump(cert.to_dict())
    if cert.chordal:
        return f"chordal\nperfect elimination order: {' '.join(cert.peo)}\n"
    return f"not chordal\nchordless cycle: {' '.join(cert.chordless_cycle)}\n"


def cmd_cohomology(args, stdin):
    report = cohomology_report(_graph(args, stdin), cap=args.cap)
    return report.to_json() if args.json else report.to_text()


def cmd_presentation(args, stdin):
    pres = raag_presentation(_graph(args, stdin))
    return _dump(pres.to_dict()) if args.json else str(pres) + "\n"


def cmd_abelianize(args, stdin):
    p = args.p or DEFAULT_PRIME
    inv = pro_p_abelian_invariants(_group(args, stdin, p), p)
    if args.json:
        return json.dumps({"free_rank": inv.free_rank, "torsion": list(inv.torsion_exponents)}, separators=(",", ":")) + "\n"
    return f"{inv}  (p = {p})\n"


def cmd_subgroup(args, stdin):
    p = args.p or DEFAULT_PRIME
    pres = _group(args, stdin, p)
    chi = _character(args.chi, pres, p)
    kernel = reidemeister_schreier(pres, chi)
    if args.cleanup:
        kernel = tietze_cleanup(kernel)
    inv = pro_p_abelian_invariants(kernel, p)
    if args.json:
        words = schreier_generators(pres, chi)
        return _dump(
            {
                "character": chi.to_dict(),
                "presentation": kernel.to_dict(),
                "schreier_generators": {
                    g: [[x, k] for x, k in words[g].syllables] for g in kernel.generators if g in words
                },
                "abelian_invariants": inv.to_dict(),
            }
        )
    return f"{kernel}\nabelianization: {inv}  (p = {p})\n"


def cmd_tree_rank(args, stdin):
    result = tree_kernel_rank(_graph(args, stdin))
    if args.json:
        return _dump(result.to_dict())
    steps = "".join(f"  remove {v} (pending at {w})\n" for v, w in result.trace)
    return f"rank: {result.rank}\n{steps}"


def cmd_fundamental(args, stdin):
    text, _ = _read_input(args.input, stdin)
    gog = graph_of_groups_from_dict(_load_json(text), args.p or DEFAULT_PRIME)
    pres = fundamental_presentation(gog)
    return _dump(pres.to_dict()) if args.json else str(pres) + "\n"


def cmd_paper_fixtures(args, stdin):
    primes = (args.p,) if args.p else (2, 3, 5, 7)
    results = reference_checks(primes)
    if args.json:
        out = _dump({"passed": all(r.passed for r in results), "checks": [r.__dict__ for r in results]})
    else:
        out = "".join(r.line() + "\n" for r in results)
    return out, 0 if all(r.passed for r in results) else 1


def cmd_verify(args, stdin):
    count, failures = audit_all_graphs(args.vertices, jobs=args.jobs)
    bad_snf = audit_smith_forms(args.matrices, seed=args.seed)
    ok = not failures and not bad_snf
    if args.json:
        out = _dump(
            {
                "graphs_checked": count,
                "graph_failures": [{"graph": graph_to_dict(g), "problems": f} for g, f in failures[:20]],
                "matrices_checked": args.matrices,
                "snf_failures": bad_snf[:20],
                "passed": ok,
            }
        )
    else:
        out = (
            f"graphs on {args.vertices} vertices: {count} checked, {len(failures)} failing\n"
            f"random Smith forms (seed {args.seed}): {args.matrices} checked, {len(bad_snf)} failing\n"
        )
    return out, 0 if ok else 1


COMMANDS = {
    "classify": (cmd_classify, "decide elementary type and coherence with certificates"),
    "construct": (cmd_construct, "build the Zp / x / * expression or a forbidden witness"),
    "decompose": (cmd_decompose, "clique-separator decomposition of a chordal graph"),
    "chordal": (cmd_chordal, "chordality with a PEO or chordless cycle"),
    "cohomology": (cmd_cohomology, "Betti numbers of H*(G, F_p) from clique counts"),
    "presentation": (cmd_presentation, "RAAG presentation of a graph"),
    "abelianize": (cmd_abelianize, "abelian invariants completed at p"),
    "subgroup": (cmd_subgroup, "Reidemeister-Schreier presentation of an index-p kernel"),
    "tree-rank": (cmd_tree_rank, "rank of the exponent-sum kernel of a tree"),
    "fundamental": (cmd_fundamental, "fundamental group presentation of a graph of groups"),
    "paper-fixtures": (cmd_paper_fixtures, "replay the bundled L3/C4/H/V computations"),
    "verify": (cmd_verify, "exhaustive and randomized self-checks against brute force"),
}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _prime(text: str) -> int:
    try:
        return require_prime(int(text))
    except (ValueError, PresentationError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["edge", "json"], help="input format (default: guess)")
    common.add_argument("-p", type=_prime, default=None, help=f"prime (default {DEFAULT_PRIME})")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CLIQUE_CAP, help="vertex cap for clique enumeration")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="raagp", description="Right-angled Artin pro-p group toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name not in ("paper-fixtures", "verify"):
            sp.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
        if name == "subgroup":
            sp.add_argument("--chi", help="character: gen=residue,... or a character JSON file (default: all ones)")
            sp.add_argument("--cleanup", action="store_true", help="apply conservative Tietze cleanup")
        if name == "verify":
            sp.add_argument("--vertices", type=_positive, default=5, help="audit all graphs on this many vertices")
            sp.add_argument("--matrices", type=int, default=1000, help="random matrices for the Smith form audit")
            sp.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    return parser


def run_cli(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fn, _ = COMMANDS[args.command]

    def fail(kind: str, message: str, code: int, **extra) -> int:
        if args.json:
            stderr.write(json.dumps({"error": kind, "message": message, **extra}, separators=(",", ":")) + "\n")
        else:
            stderr.write(f"raagp {args.command}: {message}\n")
        return code

    try:
        result = fn(args, stdin)
    except UsageError as exc:
        return fail("usage_error", str(exc), 2)
    except DomainError as exc:
        return fail(exc.kind, str(exc), 1, **exc.extra)
    except (GraphError, PresentationError, GraphOfGroupsError) as exc:
        return fail(type(exc).__name__, str(exc), 1)
    out, code = result if isinstance(result, tuple) else (result, 0)
    stdout.write(out)
    return code


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
