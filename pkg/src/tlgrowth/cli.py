"""Command-line front end (``tlgrowth``).

Exit codes: 0 success, 1 domain error (bad graph file, rejected witness,
arithmetic failure), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .classify import SWEEP_HEADER, classify_by_theorem, cross_check, sweep, sweep_row
from .coeffs import ParamError, format_scalar, parse_scalar
from .coxeter import INF, SYMBOLIC, CoxGraph, GraphError, Params, load_graph, relations
from .freealg import DEGLEX, MonomialOrder, format_word, parse_word
from .groebner import CAP_ENV, GroebnerError, complete, default_cap
from .growth import (
    INFINITE,
    FiniteDimensional,
    GrowthError,
    build_automaton,
    class_to_json,
    classify,
    counts_csv,
    graded_counts,
    growth_graph,
    total_dimension,
)
from .presets import figure_table, list_presets, parse_preset
from .witness import FreePairCertificate, exponential_lower_bound, fixture, verify_free_pair

JSON_SCHEMA_VERSION = 1

DOMAIN_ERRORS = (GraphError, GroebnerError, GrowthError, ParamError, KeyError, ValueError, OSError)


class UsageError(Exception):
    pass


# -- argument plumbing ---------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", nargs="+", metavar="NAME", help='preset id, e.g. "B 4", "tilde-A 3", "fig 4.6"')
    src.add_argument("--graph", metavar="PATH", help="graph file (JSON, version 1)")


def _add_algebra(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, default=None, help=f"degree cap (default max(2L+2, 4n), or ${CAP_ENV})")
    p.add_argument("--order", default=None, metavar="PREC",
                   help="letter precedence smallest first, e.g. 3,1,2 (default natural)")
    p.add_argument("--tau", default=None, help="specialise t, t1 and t2 to this value")
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                   help="specialise one of t, t1, t2 (repeatable)")


def _add_format(p: argparse.ArgumentParser, choices=("table", "json")) -> None:
    p.add_argument("--format", choices=choices, default="table")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tlgrowth", description="Generalized Temperley-Lieb algebras: bases, dimensions, growth.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="print the reduced Gröbner basis")
    _add_input(p); _add_algebra(p); _add_format(p)

    p = sub.add_parser("dim", help='total dimension, or "infinite"')
    _add_input(p); _add_algebra(p); _add_format(p)

    p = sub.add_parser("hilbert", help="graded counts of normal words")
    _add_input(p); _add_algebra(p)
    p.add_argument("--max-degree", type=int, required=True)
    _add_format(p, ("table", "json", "csv"))

    p = sub.add_parser("growth", help="growth class with evidence")
    _add_input(p); _add_algebra(p); _add_format(p)

    p = sub.add_parser("growth-graph", help="growth graph on normal words of length l-1")
    _add_input(p); _add_algebra(p)
    p.add_argument("--export", metavar="PATH", help='write edges as "u -> v" lines')
    p.add_argument("--limit", type=int, default=200_000, help="maximum number of vertices")
    _add_format(p)

    p = sub.add_parser("witness", help="verify a free pair q1, q2")
    _add_input(p); _add_algebra(p)
    p.add_argument("--q1", help="word in comma syntax, e.g. 2,1,3")
    p.add_argument("--q2")
    p.add_argument("--fixture", metavar="TAG", help="use the stored pair of a figure")
    p.add_argument("--max-degree", type=int, default=0, help="also print the lower bound up to this degree")
    _add_format(p)

    p = sub.add_parser("classify", help="classify by the theorem lists")
    _add_input(p)
    p.add_argument("--cross-check", action="store_true", help="also run the computation and compare")
    p.add_argument("--cap", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("preset", help="list presets or show one")
    p.add_argument("action", choices=["list", "show", "LIST", "SHOW"])
    p.add_argument("name", nargs="*")

    p = sub.add_parser("sweep", help="cross-check every small connected graph (CSV)")
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--labels", default="3,4,5,6")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", metavar="PATH", help="write CSV here instead of stdout")
    return ap


def _graph(args) -> CoxGraph:
    if args.graph is not None:
        return load_graph(args.graph)
    return parse_preset(" ".join(args.preset))


def _params(args) -> Params:
    assignment = {}
    if args.tau is not None:
        v = parse_scalar(args.tau)
        assignment = {"t": v, "t1": v, "t2": v}
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        assignment[k.strip()] = parse_scalar(v)
    if not assignment:
        return SYMBOLIC
    return Params.specialized(assignment)


def _order(args) -> MonomialOrder:
    if args.order is None:
        return DEGLEX
    return MonomialOrder(tuple(parse_word(args.order)))


def _describe_params(p: Params) -> str:
    if p.is_symbolic():
        return "symbolic t, t1, t2"
    return ", ".join(f"{k}={format_scalar(v)}" for k, v in (("t", p.t), ("t1", p.t1), ("t2", p.t2)))


class _Run:
    """Shared pipeline state for the algebra subcommands."""

    def __init__(self, args):
        self.graph = _graph(args)
        if not self.graph.is_connected():
            raise GraphError("the graph must be connected")
        self.params = _params(args)
        self.order = _order(args)
        if self.order.precedence is not None and len(self.order.precedence) != self.graph.n:
            raise UsageError(f"--order must list all {self.graph.n} letters")
        self.rels = relations(self.graph, self.params)
        self.cap = args.cap if args.cap is not None else default_cap(self.rels, self.order)
        if self.cap < 2:
            raise UsageError("--cap must be >= 2")
        self._gb = None

    @property
    def gb(self):
        if self._gb is None:
            self._gb = complete(self.rels, self.order, degree_cap=self.cap)
        return self._gb

    def header(self) -> list[str]:
        g = self.graph
        lines = [
            f"# graph {g.name or '-'} {g.key()}",
            f"# order {self.order.describe()}",
            f"# cap {self.cap}",
            f"# params {_describe_params(self.params)}",
        ]
        if g.has_big_labels():
            lines.append("# assumption: labels m >= 6 use the lower term t*Alt(i,j,m-2)")
        if self._gb is not None:
            lines.append(f"# basis {self.gb.status}, {len(self.gb)} rules")
        return lines

    def meta(self) -> dict:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "graph": self.graph.to_json() | {"key": self.graph.key(), "name": self.graph.name},
            "order": self.order.describe(),
            "cap": self.cap,
            "params": _describe_params(self.params),
            "basis_status": self.gb.status,
            "rules": len(self.gb),
        }


def _emit(out, args, header: list[str], lines: list[str], payload: dict) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return
    for line in header + lines:
        out.write(line + "\n")


def _incomplete_note(run: _Run) -> list[str]:
    if run.gb.complete:
        return []
    return [f"# warning: basis capped at degree {run.cap}; counts are upper bounds"]


# -- subcommands ----------------------------------------------------------------------

def cmd_gb(args, out) -> int:
    run = _Run(args)
    gb = run.gb
    rules = gb.serialize().splitlines()
    _emit(out, args, run.header(), rules, run.meta() | {"rules_text": rules})
    return 0


def cmd_dim(args, out) -> int:
    run = _Run(args)
    auto = build_automaton(run.gb.leading_words(), run.graph.n)
    dim = total_dimension(auto)
    text = INFINITE if dim == INFINITE else str(dim)
    _emit(out, args, run.header() + _incomplete_note(run), [text], run.meta() | {"dim": dim})
    return 0


def cmd_hilbert(args, out) -> int:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be >= 0")
    run = _Run(args)
    counts = graded_counts(build_automaton(run.gb.leading_words(), run.graph.n), args.max_degree)
    if args.format == "json":
        _emit(out, args, [], [], run.meta() | {"counts": counts})
    else:
        _emit(out, args, run.header() + _incomplete_note(run), counts_csv(counts).splitlines(), {})
    return 0


def cmd_growth(args, out) -> int:
    run = _Run(args)
    gb = run.gb
    if gb.complete:
        auto = build_automaton(gb.leading_words(), run.graph.n)
        cls = classify(auto)
        evidence = [f"# automaton {auto.n_states} states"]
    else:
        from .classify import classify_by_computation

        cls, ev = classify_by_computation(run.graph, run.cap, run.params)
        evidence = [f"# {ev.note}"] if ev.note else []
    _emit(out, args, run.header() + evidence, [cls.describe()], run.meta() | {"class": class_to_json(cls)})
    return 0


def cmd_growth_graph(args, out) -> int:
    run = _Run(args)
    gg = growth_graph(run.gb.leading_words(), run.graph.n, args.limit)
    text = gg.export()
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(text)
    cycles = gg.cycles()
    lines = [
        f"vertices {len(gg.vertices)}",
        f"edges {len(gg.edges)}",
        f"cyclic components {len(cycles)} (sizes {', '.join(str(len(c)) for c in cycles) or '-'})",
    ]
    if not args.export:
        lines += text.splitlines()
    payload = run.meta() | {
        "ell": gg.ell,
        "vertices": [format_word(w) for w in gg.vertices],
        "edges": [[format_word(gg.vertices[u]), format_word(gg.vertices[v])] for u, v in gg.edges],
    }
    _emit(out, args, run.header() + _incomplete_note(run), lines, payload)
    return 0


def cmd_witness(args, out) -> int:
    run = _Run(args)
    if args.fixture:
        fx = fixture(args.fixture)
        q1, q2 = fx.q1, fx.q2
    elif args.q1 and args.q2:
        q1, q2 = parse_word(args.q1), parse_word(args.q2)
    else:
        raise UsageError("give --q1 and --q2, or --fixture TAG")
    res = verify_free_pair(q1, q2, run.gb.leading_words(), run.gb.complete, run.graph.n)
    ok = isinstance(res, FreePairCertificate)
    if ok:
        lines = [f"accepted: window {res.window}, {res.checked_count} products checked"]
        if args.max_degree:
            bound = exponential_lower_bound(res, args.max_degree)
            lines += ["degree,lower_bound"] + [f"{d},{c}" for d, c in enumerate(bound)]
        payload = run.meta() | {"accepted": True, "certificate": res.to_json()}
    else:
        lines = [f"rejected: {res.reason}"]
        payload = run.meta() | {"accepted": False, "reason": res.reason}
    header = run.header() + [f"# q1 {format_word(q1)}", f"# q2 {format_word(q2)}"]
    _emit(out, args, header, lines, payload)
    return 0 if ok else 1


def cmd_classify(args, out) -> int:
    g = _graph(args)
    if not args.cross_check:
        th = classify_by_theorem(g)
        _emit(out, args, [f"# graph {g.name or '-'} {g.key()}"], [th.describe()],
              {"schema": JSON_SCHEMA_VERSION, "graph": g.key(), "theorem_class": th.to_json()})
        return 0
    rep = cross_check(g, args.cap)
    lines = [
        f"theorem: {rep.theorem_class.describe()}",
        f"computed: {rep.computed_class.describe()}",
        f"agreement: {'yes' if rep.agreement else 'no'}" + (" (inconclusive)" if rep.inconclusive else ""),
    ]
    header = [f"# graph {g.name or '-'} {g.key()}", f"# basis {rep.evidence.basis_status}, {rep.evidence.rules} rules"]
    _emit(out, args, header, lines, {"schema": JSON_SCHEMA_VERSION} | rep.to_json())
    return 0 if rep.agreement else 1


def cmd_preset(args, out) -> int:
    action = args.action.lower()
    if action == "list":
        for line in list_presets():
            out.write(line + "\n")
        return 0
    if not args.name:
        raise UsageError("preset show needs a name")
    g = parse_preset(" ".join(args.name))
    out.write(json.dumps(g.to_json() | {"name": g.name}) + "\n")
    if g.name.startswith("fig"):
        fig = figure_table()[g.name[3:]]
        out.write(f"# q1 {fig['q1']}\n# q2 {fig['q2']}\n")
        if fig.get("note"):
            out.write(f"# {fig['note']}: {fig.get('detail', '')}\n")
    return 0


def cmd_sweep(args, out) -> int:
    labels = []
    for tok in args.labels.split(","):
        tok = tok.strip()
        labels.append(INF if tok in ("inf", "oo") else int(tok))
    if args.max_vertices < 1:
        raise UsageError("--max-vertices must be >= 1")
    sink = open(args.output, "w", encoding="utf-8") if args.output else out
    bad = 0
    try:
        sink.write(SWEEP_HEADER + "\n")
        sink.flush()
        for rep in sweep(args.max_vertices, labels, args.cap, args.jobs):
            sink.write(sweep_row(rep) + "\n")
            sink.flush()
            bad += not rep.agreement
    finally:
        if sink is not out:
            sink.close()
    return 0 if bad == 0 else 1


COMMANDS = {
    "gb": cmd_gb,
    "dim": cmd_dim,
    "hilbert": cmd_hilbert,
    "growth": cmd_growth,
    "growth-graph": cmd_growth_graph,
    "witness": cmd_witness,
    "classify": cmd_classify,
    "preset": cmd_preset,
    "sweep": cmd_sweep,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"tlgrowth: usage error: {exc}\n")
        return 2
    except DOMAIN_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"tlgrowth: error: {msg}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
