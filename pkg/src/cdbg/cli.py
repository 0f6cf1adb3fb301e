"""Command-line interface.

Exit codes: 0 success, 1 violation (non-dominating set or inconsistent
table row), 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from cdbg import bounds, constructions, harness, solver
from cdbg.constructions import VertexSet
from cdbg.graph import EXPORT_FORMATS, GraphSpec, build, export
from cdbg.words import ParameterError, ResourceLimitError, count_words

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _add_params(p: argparse.ArgumentParser, orientation: bool = True) -> None:
    p.add_argument("--d", type=int, required=True, help="alphabet size")
    p.add_argument("--t", type=int, required=True, help="constraint distance")
    p.add_argument("--n", type=int, required=True, help="word length")
    if orientation:
        group = p.add_mutually_exclusive_group()
        group.add_argument("--directed", dest="orientation", action="store_const", const="directed")
        group.add_argument("--undirected", dest="orientation", action="store_const", const="undirected")
        p.set_defaults(orientation="directed")


def _add_budget(p: argparse.ArgumentParser, default_secs: float) -> None:
    p.add_argument("--budget-secs", type=float, default=default_secs)
    p.add_argument("--budget-nodes", type=int, default=10**8)
    p.add_argument("--workers", type=int, default=1)


def _emit(args: argparse.Namespace, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode()
    if getattr(args, "out", None):
        with open(args.out, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _spec(args: argparse.Namespace) -> GraphSpec:
    return GraphSpec(args.d, args.t, args.n, args.orientation)


def cmd_graph(args: argparse.Namespace) -> int:
    g = build(_spec(args))
    _emit(args, export(g, args.format))
    print(f"{g.spec}: {g.vertex_count} vertices, {g.edge_count} edges", file=sys.stderr)
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    _emit(args, f"{count_words(args.d, args.t, args.n)}\n")
    return EXIT_OK


def _verification(s: VertexSet) -> dict:
    g = build(s.spec)
    missed = solver.undominated(g, s)
    return {"size": len(s), "dominating": not missed, "undominated": len(missed)}


def cmd_construct(args: argparse.Namespace) -> int:
    params = {"d": args.d, "t": args.t, "n": args.n, "c": args.c}
    if args.undirected and args.theorem == "thm11":
        s = constructions.directed_general_t(args.d, args.t, args.n, "undirected")
    else:
        s = constructions.construct(args.theorem, **params)
    doc = s.to_dict()
    doc.update(_verification(s))
    _emit(args, json.dumps(doc) + "\n")
    print(f"{args.theorem} on {s.spec}: {len(s)} members, claimed {s.claimed_size}, "
          f"dominating={doc['dominating']}", file=sys.stderr)
    return EXIT_OK if doc["dominating"] else EXIT_VIOLATION


def cmd_verify(args: argparse.Namespace) -> int:
    raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
    s = VertexSet.from_dict(json.loads(raw))
    doc = {"spec": s.spec.to_dict(), **_verification(s)}
    _emit(args, json.dumps(doc) + "\n")
    return EXIT_OK if doc["dominating"] else EXIT_VIOLATION


def cmd_gamma(args: argparse.Namespace) -> int:
    g = build(_spec(args))
    budget = solver.Budget(args.budget_secs, args.budget_nodes)
    result = solver.exact_gamma(g, budget, workers=args.workers)
    _emit(args, json.dumps(result.to_dict(g)) + "\n")
    print(f"{g.spec}: gamma in [{result.gamma_low}, {result.gamma_high}] ({result.status})", file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    _emit(args, json.dumps(bounds.exact_or_upper(_spec(args)).to_dict()) + "\n")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    budget = solver.Budget(args.budget_secs, args.budget_nodes)
    rows = []
    for row in harness.table_rows(args.which, args.max_vertices, budget, args.workers):
        rows.append(row)
        print(",".join(map(str, row.as_list())), file=sys.stderr)
    _emit(args, harness.render_csv(rows))
    violations = sum(r.verdict != "consistent" for r in rows)
    print(f"{len(rows)} rows, {violations} violations", file=sys.stderr)
    return EXIT_VIOLATION if violations else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdbg", description="t-constrained de Bruijn graphs and their domination numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build and export a graph")
    _add_params(p)
    p.add_argument("--format", choices=EXPORT_FORMATS + ("csv",), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("count", help="number of t-constrained words")
    _add_params(p, orientation=False)
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", help="emit a dominating set from one of the constructions")
    p.add_argument("--theorem", required=True, choices=sorted(constructions.THEOREMS))
    for name in ("d", "t", "n", "c"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--undirected", action="store_true", help="thm11 only: emit on the undirected graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a vertex set JSON document for domination")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gamma", help="exact domination number by branch and bound")
    _add_params(p)
    _add_budget(p, 60.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("bounds", help="closed-form bounds for one graph")
    _add_params(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="reproduce a summary table as CSV")
    p.add_argument("which", choices=["table1", "table2"])
    p.add_argument("--max-vertices", type=int, default=200)
    _add_budget(p, 10.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
