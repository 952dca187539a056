"""Command line interface.

Subcommands: ``forked``, ``classify``, ``lattice``, ``semigroup``,
``oracle``.  Exit codes: 0 ok, 1 input error, 2 infinite-structure error
(cyclic graph without a bound, or a semigroup past the brute-force cap),
3 internal consistency violation (a predicted/computed or oracle
mismatch, which would mean a bug).

JSON output (``--json``) is the stable machine interface; the plain-text
output is for humans and carries no stability guarantee.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .graph import (
    GraphError,
    connectivity_report,
    enumerate_cycles,
    forked_vertices,
    parse_graph,
)
from .lattice import (
    find_diamond,
    find_pentagon,
    hasse_dot,
    is_distributive,
    is_lower_semimodular,
    is_modular,
    is_upper_semimodular,
    order_isomorphic,
)
from .oracle import SemigroupTooLargeError, congruence_lattice, enumerate_congruences
from .semigroup import CyclicGraphError, finite_semigroup, render_element
from .triples import UnboundedLatticeError, render_triple, triple_lattice, triple_to_json

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFINITE = 2
EXIT_INTERNAL = 3


class _CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; keep 1 = input error.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise _CliError(EXIT_INPUT, f"cannot read {path}: {err}") from None
    try:
        return parse_graph(text)
    except GraphError as err:
        raise _CliError(EXIT_INPUT, f"{path}: {err}") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _graph_summary(g) -> dict:
    rep = connectivity_report(g)
    return {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "acyclic": not enumerate_cycles(g),
        "weak_components": len(rep.weak_components),
        "weakly_connected": rep.is_weakly_connected,
        "unilaterally_connected": rep.is_unilaterally_connected,
        "strongly_connected": rep.is_strongly_connected,
        "max_out_degree": max((len(g.out_edges[v]) for v in g.vertices), default=0),
    }


def _bounded_lattice(g, bound, enumerating: str):
    cyclic = bool(enumerate_cycles(g))
    if cyclic and bound is None:
        raise _CliError(
            EXIT_INFINITE, f"graph has cycles: --bound N is required for {enumerating}"
        )
    try:
        lat = triple_lattice(g, bound if cyclic else None)
    except UnboundedLatticeError as err:
        raise _CliError(EXIT_INFINITE, str(err)) from None
    return lat, cyclic


def _verdicts(lat) -> dict:
    return {
        "distributive": is_distributive(lat),
        "modular": is_modular(lat),
        "lower_semimodular": is_lower_semimodular(lat),
        "upper_semimodular": is_upper_semimodular(lat),
    }


def _flags(d: dict) -> str:
    return " ".join(f"{k}={'yes' if v else 'no'}" for k, v in d.items())


def cmd_forked(args) -> int:
    g = _load(args.graph_file)
    names = sorted(forked_vertices(g))
    _emit(args, {"forked_vertices": names}, names)
    return EXIT_OK


@dataclass(frozen=True)
class ClassificationReport:
    """What `classify` reports: the structural prediction, the verdicts
    computed from an enumerated lattice when one was built, and whether
    the two agree (None until enumeration runs, "inconclusive" when a
    bounded probe cannot certify a predicted failure)."""

    graph: dict
    forked_vertices: list
    predicted: dict
    computed: dict | None = None
    lattice_size: int | None = None
    bounded: bool | None = None
    witness: dict | None = None
    agreement: object = None


def _agreement(predicted: dict, computed: dict, bounded: bool):
    """Exact lattices must match the forked-vertex prediction outright.
    A bounded probe only certifies failures: a pentagon or diamond in a
    sublattice is one in the full lattice, but their absence proves
    nothing, so a distributive probe under a non-distributive prediction
    is inconclusive rather than a violation."""
    if not bounded:
        return computed == predicted
    if predicted["distributive"]:
        return computed == predicted
    return True if not computed["distributive"] else "inconclusive"


def classify_graph(g, enumerate_lattice: bool = False, bound: int | None = None) -> ClassificationReport:
    forked = sorted(forked_vertices(g))
    no_forks = not forked
    predicted = {
        "distributive": no_forks,
        "modular": no_forks,
        "lower_semimodular": no_forks,
        "upper_semimodular": True,
    }
    report = ClassificationReport(
        graph=_graph_summary(g), forked_vertices=forked, predicted=predicted
    )
    if not enumerate_lattice:
        return report
    lat, bounded = _bounded_lattice(g, bound, "--enumerate")
    computed = _verdicts(lat)
    witness = None
    if not computed["distributive"]:
        w = find_pentagon(lat) or find_diamond(lat)
        if w is None:
            raise _CliError(
                EXIT_INTERNAL,
                "non-distributive lattice with no pentagon or diamond (bug)",
            )
        witness = {
            "kind": w.kind,
            "members": [render_triple(lat.labels[i]) for i in w.members],
        }
    return ClassificationReport(
        graph=report.graph,
        forked_vertices=forked,
        predicted=predicted,
        computed=computed,
        lattice_size=len(lat),
        bounded=bounded,
        witness=witness,
        agreement=_agreement(predicted, computed, bounded),
    )


def cmd_classify(args) -> int:
    g = _load(args.graph_file)
    report = classify_graph(g, enumerate_lattice=args.enumerate, bound=args.bound)
    summary = report.graph
    lines = [
        f"graph: {summary['vertices']} vertices, {summary['edges']} edges, "
        f"{'acyclic' if summary['acyclic'] else 'cyclic'}, "
        f"{summary['weak_components']} weak component(s)",
        f"forked vertices: {' '.join(report.forked_vertices) if report.forked_vertices else '(none)'}",
        f"predicted: {_flags(report.predicted)}",
    ]
    if report.computed is not None:
        kind = f"bounded probe (bound {args.bound})" if report.bounded else "exact lattice"
        lines.append(
            f"computed ({kind}, {report.lattice_size} elements): {_flags(report.computed)}"
        )
        if report.witness is not None:
            lines.append(
                f"witness: {report.witness['kind']} " + " ".join(report.witness["members"])
            )
        shown = (
            report.agreement
            if isinstance(report.agreement, str)
            else ("yes" if report.agreement else "VIOLATION")
        )
        lines.append(f"agreement: {shown}")
    _emit(args, asdict(report), lines)
    return EXIT_INTERNAL if report.agreement is False else EXIT_OK


def cmd_lattice(args) -> int:
    g = _load(args.graph_file)
    lat, bounded = _bounded_lattice(g, args.bound, "lattice enumeration")
    verdicts = _verdicts(lat)
    covers = sorted((lower, upper) for upper, lower in lat.cover_set)
    payload = {
        "elements": [triple_to_json(t) for t in lat.labels],
        "covers": [[lo, up] for lo, up in covers],
        "verdicts": verdicts,
        "bounded": bounded,
    }
    lines = [f"{len(lat)} elements:"]
    lines.extend(f"  [{i}] {render_triple(t)}" for i, t in enumerate(lat.labels))
    lines.append(f"{len(covers)} cover pairs:")
    lines.extend(f"  [{lo}] < [{up}]" for lo, up in covers)
    lines.append(f"verdicts: {_flags(verdicts)}" + (" (bounded probe)" if bounded else ""))
    if args.dot:
        Path(args.dot).write_text(hasse_dot(lat, render_triple), encoding="utf-8")
        if not args.json:
            lines.append(f"dot written to {args.dot}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    g = _load(args.graph_file)
    try:
        sem = finite_semigroup(g)
    except CyclicGraphError as err:
        raise _CliError(EXIT_INFINITE, str(err)) from None
    rendered = [render_element(x) for x in sem.elements]
    payload = {"elements": rendered, "table": [list(row) for row in sem.table]}
    lines = [f"{len(sem)} elements:"]
    lines.extend(f"  [{i}] {name}" for i, name in enumerate(rendered))
    lines.append("cayley table (indices):")
    lines.extend(
        f"  [{i}] " + " ".join(str(x) for x in row) for i, row in enumerate(sem.table)
    )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args.graph_file)
    try:
        sem = finite_semigroup(g)
        congs = enumerate_congruences(sem, cap=args.cap)
        cong_lat = congruence_lattice(sem, cap=args.cap)
    except CyclicGraphError as err:
        raise _CliError(EXIT_INFINITE, str(err)) from None
    except SemigroupTooLargeError as err:
        raise _CliError(EXIT_INFINITE, str(err)) from None
    ct_lat = triple_lattice(g)
    iso = order_isomorphic(ct_lat, cong_lat)
    ok = iso and len(congs) == len(ct_lat)
    payload = {
        "semigroup_size": len(sem),
        "congruences": len(congs),
        "triples": len(ct_lat),
        "order_isomorphic": iso,
    }
    lines = [
        f"semigroup: {len(sem)} elements",
        f"congruences: {len(congs)}",
        f"triples: {len(ct_lat)}",
        f"order isomorphic: {'yes' if iso else 'NO (violation)'}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gislat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph_file", help="graph description file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("forked", cmd_forked, "list forked vertices")

    p = add("classify", cmd_classify, "predict and optionally verify lattice verdicts")
    p.add_argument("--enumerate", action="store_true", help="build the lattice and cross-check")
    p.add_argument("--bound", type=int, help="free-cycle value bound for cyclic graphs")

    p = add("lattice", cmd_lattice, "dump the congruence-triple lattice")
    p.add_argument("--bound", type=int, help="free-cycle value bound for cyclic graphs")
    p.add_argument("--dot", metavar="PATH", help="write the Hasse diagram as DOT")

    add("semigroup", cmd_semigroup, "list elements and the multiplication table")

    p = add("oracle", cmd_oracle, "brute-force congruences and compare with triples")
    p.add_argument("--cap", type=int, default=200, help="semigroup size cap (default 200)")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as err:
        print(f"error: {err.message}", file=sys.stderr)
        return err.code


def main_entry() -> None:
    raise SystemExit(main())
