"""Command-line front end: ``sddlab compute | linegraph | verify | search``.

Exit codes: 0 ok, 2 unparsable input, 3 precondition failure, 4 a
non-literal bound was violated (or its equality clause mismatched).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from sddlab import graph6
from sddlab.bounds import LITERAL_IDS, expand_theorems, sweep_many
from sddlab.enumeration import (
    GraphStream,
    Interval,
    classify_by_sdd,
    extremal_search,
    identify,
    inverse_solve,
)
from sddlab.errors import BadParameter, ParseError, PreconditionError
from sddlab.graph import Graph, named_graph, parse_edge_list
from sddlab.indices import INDEX_IDS, compute, render_number, zagreb_m1
from sddlab.linegraph import line_graph

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VIOLATION = 0, 2, 3, 4


# -- input -----------------------------------------------------------------

def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _load_graphs(args) -> tuple[list[Graph], str]:
    """Graphs named by --graph or read from --input, with an input digest."""
    if args.graph:
        return [named_graph(args.graph)], _digest(f"graph:{args.graph}".encode())
    if args.input:
        raw = Path(args.input).read_bytes()
        text = raw.decode("ascii", errors="replace")
        fmt = getattr(args, "input_format", "auto")
        if fmt == "auto":
            first = next((ln for ln in text.splitlines() if ln.strip()), "")
            fmt = "edgelist" if len(first.split()) == 2 else "g6"
        if fmt == "edgelist":
            graphs = [parse_edge_list(text)]
        else:
            graphs = list(graph6.read_graph6(text.splitlines()))
        return graphs, _digest(raw)
    raise BadParameter("give --graph NAME or --input FILE")


def _parse_alphas(values: list[str] | None) -> list[Fraction]:
    out = []
    for chunk in values or []:
        for tok in chunk.split(","):
            tok = tok.strip()
            if not tok:
                continue
            try:
                out.append(Fraction(tok))
            except ValueError:
                raise ParseError(f"bad exponent {tok!r}") from None
    return out


def _parse_intervals(text: str) -> list[Interval]:
    """``"(2,4],(4,6]"`` -> intervals; only the half-open ``(lo,hi]`` form is accepted."""
    out = []
    for part in text.replace(" ", "").split("]"):
        part = part.lstrip(",")
        if not part:
            continue
        if not part.startswith("(") or part.count(",") != 1:
            raise ParseError(f"interval {part + ']'!r} is not of the form (lo,hi]")
        lo, hi = part[1:].split(",")
        try:
            out.append(Interval(Fraction(lo), Fraction(hi)))
        except ValueError:
            raise ParseError(f"bad interval endpoints in {part + ']'!r}") from None
    if not out:
        raise ParseError("no intervals given")
    return out


# -- output ----------------------------------------------------------------

def _report(args, digest: str, results, summary, started: float) -> dict:
    report = {
        "command": " ".join(["sddlab"] + list(args._argv)),
        "input_digest": digest,
        "results": results,
        "summary": summary,
    }
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - started, 3)
    return report


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args, report: dict, csv_rows: list[dict] | None = None) -> None:
    if getattr(args, "report", None):
        Path(args.report).write_text(_dump_json(report))
    if args.format == "csv" and csv_rows is not None:
        sys.stdout.write(_csv(csv_rows))
    else:
        sys.stdout.write(_dump_json(report))


# -- commands --------------------------------------------------------------

def cmd_compute(args) -> int:
    started = time.perf_counter()
    graphs, digest = _load_graphs(args)
    ids = [s.strip().lower() for s in args.indices.split(",") if s.strip()]
    unknown = [i for i in ids if i not in INDEX_IDS]
    if unknown:
        raise ParseError(f"unknown index ids {unknown}; known: {', '.join(INDEX_IDS)}")
    alphas = _parse_alphas(args.alpha)
    alpha = alphas[0] if alphas else None
    results, rows = [], []
    for g in graphs:
        values = {}
        for key in ids:
            v = compute(g, key, alpha)
            values[key] = v.render()
            rows.append({"graph6": graph6.encode(g), "index": key,
                         "alpha": "" if v.alpha is None else render_number(Fraction(v.alpha)),
                         "mode": v.mode, "value": v.render()})
        results.append({"graph6": graph6.encode(g), "name": identify(g) if g.n <= 10 else None,
                        "n": g.n, "m": g.m, "indices": values})
    summary = {"graphs": len(graphs), "indices": ids,
               "alpha": None if alpha is None else render_number(alpha)}
    _emit(args, _report(args, digest, results, summary, started), rows)
    return EXIT_OK


def cmd_linegraph(args) -> int:
    started = time.perf_counter()
    graphs, digest = _load_graphs(args)
    results, lines = [], []
    for g in graphs:
        lg = line_graph(g).lg
        code = graph6.encode(lg)
        lines.append(code)
        predicted = zagreb_m1(g) / 2 - g.m
        results.append({
            "graph6": graph6.encode(g),
            "line_graph6": code,
            "m_L": lg.m,
            "lemma_m_L_equals_half_M1_minus_m": lg.m == predicted,
        })
    if args.output:
        Path(args.output).write_text("".join(c + "\n" for c in lines))
    summary = {"graphs": len(graphs),
               "lemma_failures": sum(1 for r in results if not r["lemma_m_L_equals_half_M1_minus_m"])}
    _emit(args, _report(args, digest, results, summary, started), results)
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    tids = expand_theorems(args.theorems.split(","))
    alphas = _parse_alphas(args.alpha) or [Fraction(1)]
    if args.input:
        stream = GraphStream.from_file(args.input, dedup=args.dedup)
        digest = _digest(Path(args.input).read_bytes())
    else:
        stream = GraphStream.builtin(args.n_max, n_min=args.n_min)
        digest = _digest(f"builtin:{args.n_min}..{args.n_max}".encode())
    results = sweep_many(tids, stream, alphas, workers=args.workers)
    summaries = [r.summary() for r in results.values()]
    expected = [d for t, r in results.items() if t in LITERAL_IDS for d in r.discrepancies]
    unexpected = [d for t, r in results.items() if t not in LITERAL_IDS for d in r.discrepancies]
    summary = {
        "theorems": [t.value for t in tids],
        "alphas": [render_number(a) for a in alphas],
        "per_theorem": summaries,
        "expected_falsifications": len(expected),
        "unexpected_discrepancies": len(unexpected),
        "discrepancies": [d.to_dict() for d in sorted(expected + unexpected, key=lambda d: d.sort_key())],
    }
    items = [c.to_dict() for r in results.values() for c in r.checks] if (args.report or args.checks) else []
    report = _report(args, digest, items, summary, started)
    if args.report:
        Path(args.report).write_text(_dump_json(report))
    if args.format == "csv":
        sys.stdout.write(_csv(summaries))
    else:
        if not args.checks:
            report = {k: v for k, v in report.items() if k != "results"}
        sys.stdout.write(_dump_json(report))
    return EXIT_VIOLATION if unexpected else EXIT_OK


def cmd_search(args) -> int:
    started = time.perf_counter()
    digest = _digest(" ".join(args._argv).encode())
    if args.mode == "inverse":
        if args.value is None:
            raise ParseError("--mode inverse needs --value")
        try:
            value = Fraction(args.value)
        except ValueError:
            raise ParseError(f"bad --value {args.value!r}") from None
        codes = inverse_solve(value, args.n_max, args.target)
        results = [{"graph6": c, "name": identify(graph6.decode(c)), "sdd": render_number(value)}
                   for c in codes]
        summary = {"mode": "inverse", "target": args.target, "value": render_number(value),
                   "n_max": args.n_max, "count": len(results)}
    elif args.mode == "extremal":
        if args.n is None:
            raise ParseError("--mode extremal needs --n")
        res = extremal_search(args.n, args.m, args.direction)
        results = [{"graph6": c, "name": identify(graph6.decode(c)), "sdd": render_number(res.value)}
                   for c in res.witnesses]
        summary = {"mode": "extremal", "n": args.n, "m": args.m, "direction": args.direction,
                   "value": render_number(res.value), "ties": len(results)}
    else:
        if not args.intervals:
            raise ParseError("--mode classify needs --intervals")
        out = classify_by_sdd(args.n_max, _parse_intervals(args.intervals), args.target)
        results = [
            {"interval": str(r.interval),
             "members": [{"graph6": c, "name": identify(graph6.decode(c)), "sdd": render_number(s)}
                         for c, s in r.members]}
            for r in out
        ]
        summary = {"mode": "classify", "target": args.target, "n_max": args.n_max,
                   "counts": [len(r.members) for r in out]}
    rows = []
    for r in results:
        for mem in r.get("members", [r]):
            rows.append({"interval": r.get("interval", ""), **mem})
    _emit(args, _report(args, digest, results, summary, started), rows)
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def _common(p: argparse.ArgumentParser, graph_input: bool = True) -> None:
    if graph_input:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--graph", help="named graph: P5, C4, S4, K4, K2,3, C3_star, P4_star")
        src.add_argument("--input", help="graph6 file (one graph per line) or edge-list file")
        p.add_argument("--input-format", choices=["auto", "g6", "edgelist"], default="auto")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--report", help="also write the JSON report to this file")
    p.add_argument("--timing", action="store_true", help="add wall time to the report (breaks byte-identity)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sddlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate degree-based indices")
    _common(p)
    p.add_argument("--indices", default="sdd", help=f"comma list of {','.join(INDEX_IDS)}")
    p.add_argument("--alpha", action="append", help="exponent for m1a, m2a, chi")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("linegraph", help="build L(G) and check its edge count")
    _common(p)
    p.add_argument("--output", help="write graph6 of each L(G) here")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("verify", help="sweep bounds over enumerated graphs")
    _common(p, graph_input=False)
    p.add_argument("--theorems", default="all", help="comma list of ids or prefixes, or 'all'")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--input", help="graph6 file instead of the builtin generator")
    p.add_argument("--dedup", action="store_true", help="drop isomorphic repeats from --input")
    p.add_argument("--alpha", action="append", help="exponents, e.g. 1/2,1,2 (default 1)")
    p.add_argument("--workers", type=int, default=None, help="processes (default $SDDLAB_THREADS or 1)")
    p.add_argument("--checks", action="store_true", help="print every check, not only the summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="inverse, extremal and classification searches")
    _common(p, graph_input=False)
    p.add_argument("--mode", choices=["inverse", "extremal", "classify"], required=True)
    p.add_argument("--target", choices=["G", "L"], default="G")
    p.add_argument("--value", help="exact SDD value for --mode inverse, e.g. 29/3")
    p.add_argument("--intervals", help='e.g. "(2,4],(4,6]" for --mode classify')
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--direction", choices=["min", "max"], default="min")
    p.set_defaults(func=cmd_search)
    return parser


def _fail(code: int, exc: Exception) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code}) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args._argv = argv
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(EXIT_PARSE, exc)
    except PreconditionError as exc:
        return _fail(EXIT_PRECONDITION, exc)
    except OSError as exc:
        return _fail(EXIT_PARSE, exc)


if __name__ == "__main__":
    sys.exit(main())
