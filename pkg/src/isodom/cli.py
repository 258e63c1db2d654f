"""``isodom`` command line: count, poly, verify.

Exit codes: 0 success, 1 verification found mismatches, 2 operational error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__, families, graph, oracle, verify
from .families import CONVENTIONS, Variant
from .graph import FamilySpec, GraphError
from .oracle import CapExceeded, CountTable
from .polynomials import d0_corona_k1_poly, format_polynomial, from_count_table

log = logging.getLogger("isodom")


class UsageError(Exception):
    pass


def _spec_from_args(args) -> FamilySpec | None:
    if args.edges:
        return None
    if not args.family:
        raise UsageError("give --family or --edges")
    kind = args.family
    if kind in ("path", "cycle", "complete", "star"):
        if args.n is None:
            raise UsageError(f"--family {kind} needs --n")
        return FamilySpec(kind, args.n)
    if kind in ("join", "corona"):
        if not (args.lhs and args.rhs):
            raise UsageError(f"--family {kind} needs --lhs and --rhs")
        return FamilySpec(kind, children=(FamilySpec.parse(args.lhs), FamilySpec.parse(args.rhs)))
    if kind == "corona-k1":
        if args.lhs:
            base = FamilySpec.parse(args.lhs)
        elif args.n is not None:
            base = FamilySpec("path", args.n)
        else:
            raise UsageError("--family corona-k1 needs --n (path base) or --lhs")
        return FamilySpec("corona-k1", children=(base,))
    if kind == "explicit":
        if not args.lhs:
            raise UsageError("--family explicit needs --lhs explicit:N:u-v;...")
        return FamilySpec.parse(args.lhs)
    raise UsageError(f"unknown family {kind!r}")


def _load_graph(args) -> tuple[str, graph.Graph, FamilySpec | None]:
    spec = _spec_from_args(args)
    if spec is None:
        g = graph.from_edge_list(Path(args.edges).read_bytes())
        return f"edges:{args.edges}", g, None
    return str(spec), graph.build(spec), spec


def _formula_table(spec: FamilySpec | None, isolate: bool, conv) -> CountTable:
    """Count table from closed forms, or UsageError when none applies."""
    if spec is None:
        raise UsageError("no formula exists for an arbitrary edge-list graph")
    k, n = spec.kind, spec.n
    if k == "path":
        if isolate:
            return families.d0_path_table(n, conv)
        return CountTable(n, tuple([0] + [families.d_path_explicit(n, i) for i in range(1, n + 1)]))
    if isolate:
        if k == "complete":
            return CountTable(n, tuple(families.d0_complete(n, i) for i in range(n + 1)))
        if k == "star":
            return CountTable(n + 1, tuple(families.d0_star(n, i) for i in range(n + 2)))
        if k == "cycle":
            return CountTable(n, tuple([0] + [families.d0_cycle(n, i, conv) for i in range(1, n + 1)]))
        if k == "corona-k1":
            return families.d0_corona_k1_table(spec.children[0].order())
        if k == "corona" and spec.children[1] == FamilySpec("complete", 1):
            return families.d0_corona_k1_table(spec.children[0].order())
        if k == "join":
            left, right = spec.children
            if left == FamilySpec("complete", 1):
                return families.d0_k1_corona(_formula_table(right, True, conv))
            try:
                return families.d0_join(
                    _formula_table(left, True, conv), _formula_table(right, True, conv)
                )
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    what = "isolate dominating" if isolate else "dominating"
    raise UsageError(f"no {what} formula available for {spec}")


def _table(args) -> tuple[str, CountTable]:
    label, g, spec = _load_graph(args)
    conv = CONVENTIONS[args.convention]
    if args.method == "formula":
        return label, _formula_table(spec, args.isolate, conv)
    fn = oracle.count_isolate_dominating if args.isolate else oracle.count_dominating
    return label, fn(g, workers=args.workers)


def _envelope(args, label: str, kind: str, payload, started: float) -> str:
    out = {
        "command": args.command,
        "input": label,
        "result": {"kind": kind, "value": payload},
        "version": __version__,
    }
    if args.timing:
        out["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return json.dumps(out, indent=2, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def cmd_count(args) -> int:
    started = time.perf_counter()
    label, table = _table(args)
    if args.format == "csv":
        text = "\n".join(f"{i},{c}" for i, c in table.nonzero())
    elif args.format == "ascii":
        width = max(len(str(c)) for c in table)
        text = "\n".join(f"{i:>3}  {c:>{width}}" for i, c in enumerate(table))
    else:
        text = _envelope(args, label, "count-table", [str(c) for c in table], started)
    _emit(text, args.out)
    return 0


def cmd_poly(args) -> int:
    started = time.perf_counter()
    if args.variant:
        spec = _spec_from_args(args)
        if spec is None or spec.kind != "corona-k1":
            raise UsageError("--variant applies to the corona-k1 generating function only")
        label = str(spec)
        poly = d0_corona_k1_poly(spec.children[0].order(), args.variant)
    else:
        label, table = _table(args)
        poly = from_count_table(table)
    if args.format == "json":
        payload = json.loads(format_polynomial(poly, "json"))
        text = _envelope(args, label, "polynomial", payload, started)
    else:
        text = format_polynomial(poly, args.format)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    conv = CONVENTIONS[args.convention]
    if args.all:
        reports = verify.verify_all(args.n_max, args.seed, conv=conv, workers=args.workers)
    elif args.target:
        if args.target not in verify.TARGETS:
            raise UsageError(f"unknown target {args.target!r}; choose from {', '.join(verify.TARGETS)}")
        n_range = None
        if args.n_max is not None and args.target not in ("table1",):
            lo = verify.DEFAULT_N_RANGE[args.target][0]
            n_range = (lo, max(lo, args.n_max))
        reports = [
            verify.verify_formula(
                args.target, args.variant, conv, n_range, seed=args.seed, workers=args.workers
            )
        ]
    else:
        raise UsageError("give --target ID or --all")
    for r in reports:
        s = r.summary
        log.info("%s: %d/%d cells match", json.dumps(r.target, sort_keys=True), s["matches"], s["total"])
    payload = [r.to_dict() for r in reports] if args.all else reports[0].to_dict()
    _emit(_envelope(args, args.target or "all", "verification-report", payload, started), args.out)
    return 0 if all(r.clean for r in reports) else 1


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=graph.KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--lhs", help="sub-spec such as path:4 or corona(path:2,complete:1)")
    p.add_argument("--rhs", help="second sub-spec for join / corona")
    p.add_argument("--edges", help="edge-list file")
    p.add_argument("--isolate", action="store_true", help="count isolate dominating sets")
    p.add_argument("--method", choices=("oracle", "formula"), default="oracle")
    p.add_argument("--convention", choices=sorted(CONVENTIONS), default="default")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isodom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--workers", type=int, default=None, help="oracle worker threads")
    parser.add_argument("--timing", action="store_true", help="add wall time to JSON output")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="per-cardinality counts")
    _add_graph_flags(p)
    p.add_argument("--format", choices=("csv", "json", "ascii"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("poly", help="(isolate) domination polynomial")
    _add_graph_flags(p)
    p.add_argument("--variant", choices=("literal", "reconciled"))
    p.add_argument("--format", choices=("ascii", "coeff-csv", "json"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="compare formulas against the oracle")
    p.add_argument("--target")
    p.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=tuple(v.value for v in Variant))
    p.add_argument("--convention", choices=sorted(CONVENTIONS), default="default")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, CapExceeded, ValueError, OSError) as exc:
        print(f"isodom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
