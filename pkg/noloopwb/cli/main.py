"""
Command-line entry point.

    noloopwb basis FILE
    noloopwb projective FILE --vertex X [--graph out.dot]
    noloopwb pd FILE --simple X --depth D
    noloopwb raycat FILE [--check-cancellation]
    noloopwb contours FILE --max-len L
    noloopwb pennyfarthing FILE
    noloopwb neighborhood FILE --vertex X
    noloopwb cleave FILE --diagram F [--quotient-long RAY]
    noloopwb filtration verify FILE --vertex X --chain F --depth D
    noloopwb filtration search FILE --vertex X --depth D --budget B
    noloopwb certify FILE --vertex X --depth D --budget B
    noloopwb corpus run | corpus list

Exit codes: 0 pass or inconclusive, 1 failed check, 2 unreadable input or usage.
"""

import argparse
import logging
import shlex
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from noloopwb import __version__
from noloopwb.algebra.basis import AlgebraBasis, build_algebra
from noloopwb.certifier.filtration import chain_from_generators, search_alpha_filtration, verify_alpha_filtration
from noloopwb.certifier.graph import certify_no_loop
from noloopwb.cleaving.diagram import build_functor
from noloopwb.cleaving.functor import representation_infinite_witness
from noloopwb.cli.fileformat import parse_algebra_file, parse_chain_file, parse_diagram_file
from noloopwb.cli.graph_export import export_structure_graph
from noloopwb.config import WorkbenchConfig, configure_logging
from noloopwb.corpus.library import ALL_ENTRIES, run_corpus
from noloopwb.exceptions import BudgetExhausted, ParseError, WorkbenchError
from noloopwb.homology.modules import projective, radical_layers, simple
from noloopwb.homology.resolution import projective_dimension
from noloopwb.raycat.category import build_ray_category, check_cancellation
from noloopwb.raycat.contours import contours
from noloopwb.structure.neighborhood import neighborhood
from noloopwb.structure.pennyfarthing import detect_penny_farthings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class Output:
    """Collects report lines and key=value records for one command."""

    def __init__(self, stream=None):
        self.stream = stream or sys.stdout
        self.records: List[Dict[str, Any]] = []

    def line(self, text: str = "") -> None:
        print(text, file=self.stream)

    def record(self, **fields: Any) -> None:
        self.records.append(fields)

    def write_results(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            for record in self.records:
                f.write(" ".join(f"{k}={shlex.quote(str(v))}" for k, v in record.items()) + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _algebra(path: str) -> AlgebraBasis:
    try:
        return build_algebra(parse_algebra_file(_read(path)))
    except ParseError as e:
        raise ParseError(e.line, f"{path}: {e.reason}") from None


# ===== commands =====


def cmd_basis(args, out: Output) -> int:
    a = _algebra(args.file)
    out.line(f"algebra: {a.name or args.file}")
    out.line(f"field: {a.field.describe()}")
    out.line(f"dimension: {a.dimension}")
    for x in a.vertices:
        for y in a.vertices:
            space = a.hom_space(x, y)
            if space:
                out.line(f"e_{x} Λ e_{y}: {', '.join(p.label for p in space)}")
    out.record(command="basis", algebra=a.name, dimension=a.dimension)
    return EXIT_OK


def cmd_projective(args, out: Output) -> int:
    a = _algebra(args.file)
    px = projective(a, a.check_vertex(args.vertex))
    out.line(f"{px.name}: dim {px.dim}")
    out.line(f"basis: {', '.join(px.labels)}")
    for i, layer in enumerate(radical_layers(px)):
        out.line(f"layer {i}: {', '.join(layer)}")
    if args.graph:
        with open(args.graph, "w", encoding="utf-8") as f:
            f.write(export_structure_graph(px))
        out.line(f"graph written to {args.graph}")
    out.record(command="projective", vertex=args.vertex, dim=px.dim)
    return EXIT_OK


def cmd_pd(args, out: Output) -> int:
    a = _algebra(args.file)
    report = projective_dimension(simple(a, a.check_vertex(args.simple)), args.depth)
    out.line(f"pd(S_{args.simple}) = {report}")
    for i, dv in enumerate(report.dimension_vectors):
        out.line(f"  Ω^{i}: {' '.join(f'{v}:{n}' for v, n in dv.items())}")
    out.record(command="pd", vertex=args.simple, outcome=report.outcome, value=report.value, period=report.period)
    return EXIT_OK


def cmd_raycat(args, out: Output) -> int:
    a = _algebra(args.file)
    rc = build_ray_category(a)
    out.line(f"rays: {len(rc.rays)}")
    out.line(f"irreducible: {', '.join(sorted(r.label for r in rc.rays if rc.is_irreducible(r)))}")
    out.line(f"long: {', '.join(r.label for r in rc.long_morphisms()) or '-'}")
    out.record(command="raycat", rays=len(rc.rays), long=len(rc.long_morphisms()))
    if args.check_cancellation:
        result = check_cancellation(rc)
        out.line(f"cancellation: {'holds' if result.ok else 'fails: ' + result.message}")
        out.record(command="raycat", cancellation=result.ok)
        if not result.ok:
            return EXIT_FAILED
    return EXIT_OK


def cmd_contours(args, out: Output) -> int:
    a = _algebra(args.file)
    found = contours(a, args.max_len)
    for c in found:
        extra = f" loop {c.loop}^{c.power}{' deep' if c.deep else ''}" if c.loop else ""
        out.line(f"contour {c.label} ray {c.ray.label}{extra}")
    out.line(f"{len(found)} contours")
    out.record(command="contours", count=len(found))
    return EXIT_OK


def cmd_pennyfarthing(args, out: Output) -> int:
    a = _algebra(args.file)
    found = detect_penny_farthings(a)
    for pf in found:
        out.line(pf.describe())
    if not found:
        out.line("no penny-farthings")
    out.record(command="pennyfarthing", found=len(found), malformed=sum(pf.is_malformed for pf in found))
    return EXIT_OK


def cmd_neighborhood(args, out: Output) -> int:
    a = _algebra(args.file)
    result = neighborhood(a, args.vertex)
    out.line(f"vertices: {', '.join(result.vertices)}")
    out.line(f"dimension: {result.algebra.dimension}")
    for arrow in result.arrows:
        out.line(f"arrow {arrow.name}: {arrow.source} -> {arrow.target}")
    out.record(command="neighborhood", vertex=args.vertex, vertices=",".join(result.vertices))
    return EXIT_OK


def cmd_cleave(args, out: Output) -> int:
    a = _algebra(args.file)
    parsed = parse_diagram_file(_read(args.diagram))
    rc = build_ray_category(a)
    functor = build_functor(parsed.diagram, rc, parsed.images)
    witness = representation_infinite_witness(rc, parsed.diagram, functor, args.quotient_long)
    for line in functor.describe():
        out.line(f"F: {line}")
    out.line(f"type: {witness.graph_type}")
    out.line(witness.message)
    out.record(
        command="cleave",
        diagram=parsed.diagram.name,
        cleaving=witness.cleaving.ok,
        type=witness.graph_type.label,
        witness=witness.emitted,
    )
    return EXIT_OK if witness.cleaving.ok else EXIT_FAILED


def cmd_filtration_verify(args, out: Output) -> int:
    a = _algebra(args.file)
    x = a.check_vertex(args.vertex)
    alpha = args.loop or next((arrow.name for arrow in a.quiver.loops_at(x)), None)
    if alpha is None:
        out.line(f"no loop at {x}")
        return EXIT_FAILED
    chain = chain_from_generators(a, x, parse_chain_file(_read(args.chain)))
    try:
        cert = verify_alpha_filtration(a, x, alpha, chain, args.depth)
    except WorkbenchError as e:
        out.line(f"rejected: {e}")
        out.record(command="filtration-verify", vertex=x, verdict="rejected")
        return EXIT_FAILED
    out.line(cert.filtration.describe())
    for r in cert.reports:
        out.line(f"  M_{r.index} = {r.label}: dim {r.dim}, pd {r.pd}")
    out.line(f"verdict: {cert.describe()}")
    out.record(command="filtration-verify", vertex=x, verdict=cert.verdict, depth=cert.depth)
    return EXIT_OK


def cmd_filtration_search(args, out: Output) -> int:
    a = _algebra(args.file)
    x = a.check_vertex(args.vertex)
    alpha = args.loop or next((arrow.name for arrow in a.quiver.loops_at(x)), None)
    if alpha is None:
        out.line(f"no loop at {x}")
        return EXIT_FAILED
    try:
        found = search_alpha_filtration(a, x, alpha, args.depth, args.budget)
    except BudgetExhausted as e:
        out.line(f"inconclusive: {e}")
        out.record(command="filtration-search", vertex=x, result="inconclusive")
        return EXIT_OK
    if found is None:
        out.line("none")
        out.record(command="filtration-search", vertex=x, result="none")
        return EXIT_OK
    out.line(found.describe())
    out.record(command="filtration-search", vertex=x, result="found", chain=found.describe())
    return EXIT_OK


def cmd_certify(args, out: Output) -> int:
    a = _algebra(args.file)
    report = certify_no_loop(a, a.check_vertex(args.vertex), args.depth, args.budget)
    for line in report.lines():
        out.line(line)
    out.record(
        command="certify",
        vertex=report.vertex,
        loop=report.loop or "",
        branch=report.branch,
        status=report.status,
        conclusion=report.conclusion,
    )
    return EXIT_FAILED if report.status == "fail" else EXIT_OK


def cmd_corpus(args, out: Output) -> int:
    if args.action == "list":
        for entry in sorted(ALL_ENTRIES, key=lambda e: e.name):
            out.line(f"{entry.name}: {entry.file} ({len(entry.expectations)} expectations)")
        return EXIT_OK
    failures = 0
    for r in run_corpus():
        mark = "ok" if r.ok else "MISMATCH"
        out.line(f"{r.entry} {r.check} [{r.provenance}]: {mark} (expected {r.expected}, got {r.actual})")
        out.record(entry=r.entry, check=r.check, provenance=r.provenance, ok=r.ok, actual=r.actual)
        failures += not r.ok
    out.line(f"{failures} mismatches")
    return EXIT_FAILED if failures else EXIT_OK


# ===== parser =====


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noloopwb", description="Bound quiver algebra workbench")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--results", help="Write key=value result records to this file")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str, parent=sub) -> argparse.ArgumentParser:
        p = parent.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    def with_file(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("file", help="Algebra file (noloopwb/1)")
        return p

    with_file(command("basis", cmd_basis, "Basis paths per corner space"))

    p = with_file(command("projective", cmd_projective, "P_x with its radical layers"))
    p.add_argument("--vertex", required=True)
    p.add_argument("--graph", help="Write the structure graph of P_x as DOT")

    p = with_file(command("pd", cmd_pd, "Projective dimension of a simple module"))
    p.add_argument("--simple", required=True, metavar="X")
    p.add_argument("--depth", type=int, default=WorkbenchConfig.PD_DEPTH)

    p = with_file(command("raycat", cmd_raycat, "Ray category and long morphisms"))
    p.add_argument("--check-cancellation", action="store_true")

    p = with_file(command("contours", cmd_contours, "Contours up to a path length"))
    p.add_argument("--max-len", type=int, required=True)

    with_file(command("pennyfarthing", cmd_pennyfarthing, "Detect penny-farthings"))

    p = with_file(command("neighborhood", cmd_neighborhood, "The neighbourhood algebra of a vertex"))
    p.add_argument("--vertex", required=True)

    p = with_file(command("cleave", cmd_cleave, "Check a cleaving diagram"))
    p.add_argument("--diagram", required=True)
    p.add_argument("--quotient-long", metavar="RAY")

    filtration = sub.add_parser("filtration", help="Verify or search α-filtrations")
    fsub = filtration.add_subparsers(dest="action", required=True)
    for name, handler in (("verify", cmd_filtration_verify), ("search", cmd_filtration_search)):
        p = with_file(command(name, handler, f"{name} an α-filtration of P_x", parent=fsub))
        p.add_argument("--vertex", required=True)
        p.add_argument("--loop", help="Loop at x (default: the first one)")
        p.add_argument("--depth", type=int, default=WorkbenchConfig.PD_DEPTH)
        if name == "verify":
            p.add_argument("--chain", required=True)
        else:
            p.add_argument("--budget", type=int, default=WorkbenchConfig.SEARCH_BUDGET)

    p = with_file(command("certify", cmd_certify, "Run the no-loop certification at a vertex"))
    p.add_argument("--vertex", required=True)
    p.add_argument("--depth", type=int, default=WorkbenchConfig.PD_DEPTH)
    p.add_argument("--budget", type=int, default=WorkbenchConfig.SEARCH_BUDGET)

    p = command("corpus", cmd_corpus, "Bundled corpus")
    p.add_argument("action", choices=["run", "list"])

    return parser


def run_command(argv: Optional[Sequence[str]] = None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(logging.DEBUG if args.verbose else None)
    WorkbenchConfig.validate()

    out = Output(stream)
    try:
        code = args.handler(args, out)
    except (ParseError, UsageError) as e:
        out.line(f"error: {e}")
        return EXIT_USAGE
    except WorkbenchError as e:
        out.line(f"failed: {e}")
        code = EXIT_FAILED
    if args.results:
        out.write_results(args.results)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
