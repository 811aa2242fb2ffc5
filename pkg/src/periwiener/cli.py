"""Command-line front end.

Subcommands: compute (indices of input graphs), gen (family constructors),
audit (claim registry run), enumerate-values (attained index values by
exhaustive enumeration).

Exit codes: 0 success / expectations matched; 1 audit mismatch; 2 usage or
parse error; 3 precondition failure on an input graph.  Every subcommand is
deterministic given its arguments and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from multiprocessing import get_context

from . import audit, corpus, generators, trees
from .errors import (
    EdgeListSyntaxError,
    GraphError,
    InvalidCodeError,
    InvalidParameterError,
    MalformedGraph6Error,
    NotATreeError,
    NotConnectedError,
    SelfLoopError,
    TooLargeError,
    TrivialGraphError,
    VertexRangeError,
)
from .graphs import Graph, distance_matrix
from .graphio import iter_graph6, parse_edge_list, write_edge_list, write_graph6
from .indices import index_vector

_PARSE_ERRORS = (
    EdgeListSyntaxError,
    MalformedGraph6Error,
    VertexRangeError,
    SelfLoopError,
    TooLargeError,
    InvalidParameterError,
    InvalidCodeError,
)
_PRECONDITION_ERRORS = (NotConnectedError, TrivialGraphError, NotATreeError)

_INDEX_NAMES = ("w", "ww", "pw", "pww", "tw", "tww")
_STRUCT_COLUMNS = ("graph", "n", "m", "diameter", "radius", "k", "pendants")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periwiener",
        description="Distance-based topological indices with a claim-audit harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute indices of input graphs")
    p_compute.add_argument("--input", default="-", help="input path or - for stdin")
    p_compute.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p_compute.add_argument("--emit", choices=("table", "json", "csv"), default="table")
    p_compute.add_argument("--indices", default=",".join(_INDEX_NAMES),
                           help="comma-separated subset of w,ww,pw,pww,tw,tww")
    p_compute.add_argument("--method", choices=("definition", "cuts"), default="definition")
    p_compute.add_argument("--output", default="-")

    p_gen = sub.add_parser("gen", help="emit a named family member")
    p_gen.add_argument("family", help="complete|path|cycle|complete-bipartite|star|"
                                      "double-star|hypercube|caterpillar|lobster|"
                                      "random-tree|random-graph")
    p_gen.add_argument("params", nargs="*", help="family parameters")
    p_gen.add_argument("--emit", choices=("edgelist", "graph6"), default="edgelist")
    p_gen.add_argument("--seed", type=int, default=audit.DEFAULT_SEED)
    p_gen.add_argument("--output", default="-")

    p_audit = sub.add_parser("audit", help="run the claim registry")
    p_audit.add_argument("--claims", default=None, help="comma-separated claim ids")
    p_audit.add_argument("--max-n", type=int, default=7, dest="max_n",
                         help="exhaustive corpus ceiling (2..8)")
    p_audit.add_argument("--trials", type=int, default=1000)
    p_audit.add_argument("--seed", type=int, default=audit.DEFAULT_SEED)
    p_audit.add_argument("--threads", type=int, default=0, help="0 = one per CPU")
    p_audit.add_argument("--output", default=None, help="write the JSON report here")

    p_enum = sub.add_parser("enumerate-values",
                            help="attained index values over all connected graphs")
    p_enum.add_argument("--max-n", type=int, default=7, dest="max_n", help="2..8")
    p_enum.add_argument("--indices", default="pww", help="one of w,ww,pw,pww,tw,tww")
    p_enum.add_argument("--threads", type=int, default=0)
    p_enum.add_argument("--output", default="-")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    handler = {
        "compute": _cmd_compute,
        "gen": _cmd_gen,
        "audit": _cmd_audit,
        "enumerate-values": _cmd_enumerate,
    }[args.command]
    return handler(args)


def entry() -> None:
    sys.exit(main())


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _open_output(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _cmd_compute(args) -> int:
    names = [s.strip() for s in args.indices.split(",") if s.strip()]
    for name in names:
        if name not in _INDEX_NAMES:
            print(f"error: unknown index {name!r}", file=sys.stderr)
            return 2
    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.format == "edgelist":
            graphs = [parse_edge_list(data)]
        else:
            graphs = list(iter_graph6(data))
    except _PARSE_ERRORS as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 2

    rows = []
    for idx, g in enumerate(graphs):
        try:
            dm = distance_matrix(g)
            iv = index_vector(g, dm)
            if args.method == "cuts":
                tv = trees.as_tree(g, dm)
                cuts = {
                    "w": trees.wiener_by_edge_cuts(tv),
                    "ww": trees.hyper_wiener_by_path_cuts(tv),
                    "pw": trees.peripheral_wiener_by_edge_cuts(tv),
                    "pww": trees.peripheral_hyper_wiener_by_path_cuts(tv),
                }
                defs = {"w": iv.w, "ww": iv.ww, "pw": iv.pw, "pww": iv.pww}
                if cuts != defs:
                    raise AssertionError(f"cut formulas disagree: {cuts} vs {defs}")
        except _PRECONDITION_ERRORS as exc:
            print(f"error: graph {idx}: {exc}", file=sys.stderr)
            return 3
        row = {
            "graph": idx,
            "n": g.n,
            "m": g.m,
            "diameter": dm.diameter,
            "radius": dm.radius,
            "k": iv.k,
            "pendants": iv.pendant_count,
        }
        for name in names:
            row[name] = getattr(iv, name)
        rows.append(row)

    columns = list(_STRUCT_COLUMNS) + names
    out, close = _open_output(args.output)
    try:
        _emit_rows(out, rows, columns, args.emit)
    finally:
        if close:
            out.close()
    return 0


def _emit_rows(out, rows, columns, emit) -> None:
    if emit == "json":
        json.dump(rows, out, indent=2, sort_keys=True)
        out.write("\n")
    elif emit == "csv":
        writer = csv.writer(out)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] for c in columns])
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c)
                  for c in columns}
        out.write("  ".join(c.rjust(widths[c]) for c in columns) + "\n")
        for row in rows:
            out.write("  ".join(str(row[c]).rjust(widths[c]) for c in columns) + "\n")


def _parse_code(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _cmd_gen(args) -> int:
    family = args.family.replace("_", "-")
    params = args.params
    try:
        g = _build_family(family, params, args.seed)
    except (_PARSE_ERRORS + (ValueError,)) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out, close = _open_output(args.output)
    try:
        if args.emit == "graph6":
            out.write(write_graph6(g) + "\n")
        else:
            out.write(write_edge_list(g))
    finally:
        if close:
            out.close()
    return 0


def _build_family(family: str, params: list[str], seed: int) -> Graph:
    def want(count: int) -> list[int]:
        if len(params) != count:
            raise InvalidParameterError(
                f"{family} takes {count} parameter(s), got {len(params)}")
        return [int(x) for x in params]

    if family == "complete":
        return generators.complete(*want(1))
    if family == "path":
        return generators.path(*want(1))
    if family == "cycle":
        return generators.cycle(*want(1))
    if family == "complete-bipartite":
        return generators.complete_bipartite(*want(2))
    if family == "star":
        return generators.star(*want(1))
    if family == "double-star":
        return generators.double_star(*want(2))
    if family == "hypercube":
        return generators.hypercube(*want(1))
    if family == "caterpillar":
        if len(params) != 1:
            raise InvalidParameterError("caterpillar takes one code like 2,0,3")
        return generators.caterpillar(_parse_code(params[0]))
    if family == "lobster":
        if len(params) != 2:
            raise InvalidParameterError("lobster takes a code like 1,0,1 and a leaf count")
        return generators.lobster(_parse_code(params[0]), int(params[1]))
    if family == "random-tree":
        (n,) = want(1)
        return generators.random_tree(n, seed=seed)
    if family == "random-graph":
        if len(params) != 2:
            raise InvalidParameterError("random-graph takes n and p")
        return generators.random_connected_graph(int(params[0]), float(params[1]), seed=seed)
    raise InvalidParameterError(f"unknown family {family!r}")


def _cmd_audit(args) -> int:
    claim_ids = None
    if args.claims:
        claim_ids = [s.strip() for s in args.claims.split(",") if s.strip()]
    try:
        budget = audit.Budget(max_n=args.max_n, trials=args.trials,
                              seed=args.seed, threads=args.threads)
        report = audit.run_all(budget, claim_ids=claim_ids)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.table())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return 0 if report.ok() else 1


def _cmd_enumerate(args) -> int:
    if not 2 <= args.max_n <= 8:
        print(f"error: --max-n must be in 2..8, got {args.max_n}", file=sys.stderr)
        return 2
    name = args.indices.strip()
    if name not in _INDEX_NAMES:
        print(f"error: unknown index {name!r}", file=sys.stderr)
        return 2
    threads = args.threads if args.threads > 0 else (os.cpu_count() or 1)
    text = enumerate_values_csv(name, args.max_n, threads)
    out, close = _open_output(args.output)
    try:
        out.write(text)
    finally:
        if close:
            out.close()
    return 0


def enumerate_values_csv(index_name: str, max_n: int, threads: int = 1) -> str:
    """CSV of (value, smallest n attaining it, witness graph6), ascending,
    with a trailing comment listing non-attained values below the maximum."""
    pool = None
    try:
        if threads > 1:
            pool = get_context("fork").Pool(threads)
        attained = corpus.scan_values(index_name, max_n, pool=pool)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    gaps = corpus.value_gaps(attained)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["value", "n", "graph6"])
    for val in sorted(attained):
        n, g6 = attained[val]
        writer.writerow([val, n, g6])
    buf.write("# non_attained: " + ",".join(str(v) for v in gaps) + "\n")
    return buf.getvalue()


if __name__ == "__main__":
    entry()
