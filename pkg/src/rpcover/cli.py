"""Command-line entry point.

Exit codes: 0 success or valid cover, 1 invalid cover, 2 usage or parse
error, 3 budget or iteration cap exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import construct, exact, formats, lll
from .core import Cover, CoverParams, Hypergraph, complete_hypergraph, dependency, random_hypergraph, uncovered_edges

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _params(k: int, r: int, p: int) -> int:
    try:
        return CoverParams.for_k(k, r, p).p
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, obj: dict, text: str) -> None:
    if args.json:
        print(json.dumps(obj))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _write_or_print_cover(args, cover: Cover, header: list[str], obj: dict) -> None:
    text = "".join(f"# {h}\n" for h in header) + formats.format_cover(cover)
    if getattr(args, "output", None):
        formats.write_cover(cover, args.output)
    obj = dict(obj, cover=formats.cover_to_json(cover))
    _emit(args, obj, text)


def _load_graph(args) -> Hypergraph:
    if getattr(args, "hypergraph", None):
        return formats.read_hypergraph(args.hypergraph)
    if args.n is None or args.k is None:
        raise UsageError("give --hypergraph or both --n and --k")
    return complete_hypergraph(args.n, args.k)


def cmd_exact(args) -> int:
    G = _load_graph(args)
    p = _params(G.k, args.r, args.p)
    cfg = exact.SearchConfig(x_max=args.x_max, node_budget=args.budget, parallel_width=args.jobs)
    t0 = time.perf_counter()
    res = exact.exact_cover_number(G, args.r, p, cfg)
    elapsed = time.perf_counter() - t0
    header = [
        f"cover number {res.label()} (n={G.n} k={G.k} m={G.m} r={args.r} p={p})",
        f"nodes {res.nodes}, exhausted depths {list(res.exhausted_depths)}, {elapsed:.2f}s",
    ]
    header += [f"bound {b.name} = {b.value}: {b.detail}" for b in res.bounds_used]
    obj = {
        "lower": res.lower,
        "upper": res.upper,
        "exact": res.exact,
        "nodes": res.nodes,
        "exhausted_depths": list(res.exhausted_depths),
        "bounds": [vars(b) for b in res.bounds_used],
    }
    if res.witness is not None:
        _write_or_print_cover(args, res.witness, header, obj)
    else:
        _emit(args, obj, "".join(f"# {h}\n" for h in header))
    return EXIT_OK if res.exact else EXIT_BUDGET


def cmd_construct(args) -> int:
    p = _params(args.k, args.r, args.p)
    if args.n < args.k:
        raise UsageError(f"need n >= k, got n={args.n}, k={args.k}")
    cover = construct.cover_general(args.n, args.k, args.r, p)
    bound = construct.size_bound(args.n, args.k, args.r, p)
    header = [
        f"divide-and-conquer cover of K_{args.n}^{args.k}, r={args.r} p={p}: {len(cover)} colorings",
        f"closed-form size bound {bound.value:.3f} (l={bound.l}, {bound.formula_id})",
    ]
    obj = {"size": len(cover), "size_bound": bound.value, "l": bound.l, "formula": bound.formula_id}
    _write_or_print_cover(args, cover, header, obj)
    return EXIT_OK


def cmd_mtc(args) -> int:
    G = formats.read_hypergraph(args.hypergraph)
    p = _params(G.k, args.r, args.p)
    try:
        cover, resamples = lll.mtc_cover(G, args.r, p, args.x, args.seed, args.max_resamples, forced=args.forced)
    except lll.ThresholdViolation as exc:
        raise UsageError(str(exc)) from exc
    except lll.ResampleLimit as exc:
        print(f"error: {exc} (seed {args.seed})", file=sys.stderr)
        return EXIT_BUDGET
    header = [f"seed {args.seed}", f"resamplings {resamples}", f"mode {'forced' if args.forced else 'guaranteed'}"]
    _write_or_print_cover(args, cover, header, {"seed": args.seed, "resamples": resamples})
    return EXIT_OK


def cmd_union(args) -> int:
    G = formats.read_hypergraph(args.hypergraph)
    p = _params(G.k, args.r, args.p)
    try:
        cover, iters = lll.union_bound_cover(G, args.r, p, args.x, args.seed, args.max_iters)
    except lll.ResampleLimit as exc:
        print(f"error: {exc} (seed {args.seed})", file=sys.stderr)
        return EXIT_BUDGET
    header = [f"seed {args.seed}", f"draws {iters}"]
    _write_or_print_cover(args, cover, header, {"seed": args.seed, "iterations": iters})
    return EXIT_OK


def bounds_summary(G: Hypergraph, r: int, p: int, x: int | None = None) -> dict:
    """Lower bounds, the constructive upper bound and random-cover thresholds for G."""
    p = CoverParams.for_k(G.k, r, p).p
    report = exact.lower_bound_report(G, r, p)
    out: dict = {"n": G.n, "k": G.k, "m": G.m, "r": r, "p": p}
    out["lower_bounds"] = {b.name: b.value for b in report.bounds}
    out["lower"] = report.lower
    out["construct_upper"] = len(construct.cover_general_array(G.n, G.k, r, p))
    out["size_bound"] = construct.size_bound(G.n, G.k, r, p).value
    d = dependency(G)
    base = lll.lll_base(G.k, r, p)
    ex = lll.min_x_edge_bound(G.m, G.k, r, p) if G.m else 1
    dx = lll.min_x_dependency_bound(d, G.k, r, p)
    out["dependency"] = d
    out["lll_base"] = base
    out["base_above_one"] = base > 1
    out["sufficient_regime"] = lll.sufficient_regime(G.k, r, p)
    out["min_x_edge_bound"] = ex
    out["min_x_dependency_bound"] = dx
    if x is not None:
        out["x"] = x
        out["edge_bound_holds"] = base > 1 and G.m <= lll.edge_threshold(G.k, r, p, x)
        out["dependency_bound_holds"] = base > 1 and d <= lll.dependency_threshold(G.k, r, p, x)
    return out


def cmd_bounds(args) -> int:
    G = _load_graph(args)
    _params(G.k, args.r, args.p)
    s = bounds_summary(G, args.r, args.p, args.x)
    lines = [f"hypergraph n={s['n']} k={s['k']} m={s['m']}, r={s['r']} p={s['p']}"]
    lines.append(f"lower bound {s['lower']}  (" + ", ".join(f"{k}={v}" for k, v in s["lower_bounds"].items()) + ")")
    lines.append(f"upper bound {s['construct_upper']}  (divide-and-conquer cover of the complete hypergraph)")
    lines.append(f"closed-form construction size {s['size_bound']:.3f}")
    lines.append(f"dependency {s['dependency']}, random-cover base {s['lll_base']:.4f}"
                 f" ({'usable' if s['base_above_one'] else 'infeasible: base <= 1'})")
    lines.append(f"smallest x by edge count: {s['min_x_edge_bound']}; by dependency: {s['min_x_dependency_bound']}")
    if args.x is not None:
        lines.append(f"at x={args.x}: edge condition {s['edge_bound_holds']}, dependency condition {s['dependency_bound_holds']}")
    _emit(args, s, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = formats.read_hypergraph(args.hypergraph)
    cover = formats.read_cover(args.cover)
    if cover.n != G.n:
        raise UsageError(f"cover has {cover.n} vertices, hypergraph has {G.n}")
    p = _params(G.k, cover.r, args.p)
    bad = uncovered_edges(G, cover, p)
    text = "valid cover\n" if not bad else f"invalid cover: {len(bad)} uncovered edges\n" + "".join(
        " ".join(map(str, e)) + "\n" for e in bad
    )
    _emit(args, {"valid": not bad, "uncovered": [list(e) for e in bad]}, text)
    return EXIT_OK if not bad else EXIT_INVALID


def table_columns(n_max: int) -> list[tuple[int, int]]:
    return [(r, p) for r in range(3, n_max + 1) for p in range(3, r + 1)]


def table_rows(n_max: int) -> list[tuple[int, int]]:
    return [(n, k) for n in range(4, n_max + 1) for k in range(3, n + 1)]


def compute_table(n_max: int = 7, budget: int = 2_000_000, jobs: int = 1) -> dict[tuple[int, int, int, int], exact.ExactResult]:
    """Cover numbers of complete hypergraphs for every cell with r <= n <= n_max."""
    cfg = exact.SearchConfig(node_budget=budget, parallel_width=jobs)
    cells = {}
    for n, k in table_rows(n_max):
        G = complete_hypergraph(n, k)
        for r, p in table_columns(n_max):
            if r > n:
                continue
            cells[(n, k, r, p)] = exact.exact_cover_number(G, r, p, cfg)
    return cells


def format_table(cells: dict, n_max: int) -> str:
    cols = table_columns(n_max)
    width = max(5, max((len(c.label()) for c in cells.values()), default=1) + 1)
    lines = ["n,k \\ r,p".ljust(10) + "".join(f"{r},{p}".rjust(width) for r, p in cols)]
    for n, k in table_rows(n_max):
        row = f"{n},{k}".ljust(10)
        for r, p in cols:
            res = cells.get((n, k, r, p))
            row += (res.label() if res else "").rjust(width)
        lines.append(row)
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    t0 = time.perf_counter()
    cells = compute_table(args.n_max, args.budget, args.jobs)
    elapsed = time.perf_counter() - t0
    obj = {
        "n_max": args.n_max,
        "seconds": elapsed,
        "cells": [
            {"n": n, "k": k, "r": r, "p": p, "lower": c.lower, "upper": c.upper, "exact": c.exact, "nodes": c.nodes}
            for (n, k, r, p), c in cells.items()
        ],
    }
    text = format_table(cells, args.n_max) + f"# {len(cells)} cells in {elapsed:.1f}s\n"
    _emit(args, obj, text)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.m is None:
        G = complete_hypergraph(args.n, args.k)
    else:
        G = random_hypergraph(args.n, args.k, args.m, args.seed)
    if args.output:
        formats.write_hypergraph(G, args.output)
        print(f"# seed {args.seed}: wrote {G.m} edges to {args.output}", file=sys.stderr)
    elif args.json:
        print(json.dumps(formats.hypergraph_to_json(G)))
    else:
        print(f"# seed {args.seed}")
        print(formats.format_hypergraph(G), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rpcover", description="Strong (r,p) covers of uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_rp=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if need_rp:
            p.add_argument("--r", type=int, required=True)
            p.add_argument("--p", type=int, required=True)
        return p

    p = common(sub.add_parser("exact", help="exact cover number by search"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--hypergraph", type=Path)
    p.add_argument("--budget", type=int, default=2_000_000, help="search nodes per top-level branch")
    p.add_argument("--x-max", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_exact)

    p = common(sub.add_parser("construct", help="divide-and-conquer cover of a complete hypergraph"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("mtc", help="Moser-Tardos resampling cover"))
    p.add_argument("--hypergraph", type=Path, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-resamples", type=int, default=1_000_000)
    p.add_argument("--forced", action="store_true", help="run even when the dependency condition fails")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_mtc)

    p = common(sub.add_parser("union", help="repeated independent random colorings"))
    p.add_argument("--hypergraph", type=Path, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=10_000)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_union)

    p = common(sub.add_parser("bounds", help="lower bounds, constructive bound and random-cover thresholds"))
    p.add_argument("--hypergraph", type=Path)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=int, help="also test both random-cover conditions at this x")
    p.set_defaults(func=cmd_bounds)

    p = common(sub.add_parser("verify", help="check a cover against a hypergraph"), need_rp=False)
    p.add_argument("--hypergraph", type=Path, required=True)
    p.add_argument("--cover", type=Path, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("table", help="cover numbers of small complete hypergraphs"), need_rp=False)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = common(sub.add_parser("gen", help="random or complete hypergraph"), need_rp=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, help="edge count; omit for the complete hypergraph")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, formats.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
