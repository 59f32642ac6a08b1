"""Command-line front end for the toolkit.

Everything the library computes is reachable as a batch command with
machine-readable output: constructing the extremal graph K_{a+k} v
(K_{n-a-b-k-1} u (b+1)K_1) plus its a-1 attachment edges (and the wider
family it distinguishes), computing adjacency spectral radii by power
iteration, evaluating the degree-based radius bound, deciding integral
and fractional (a, b, k)-criticality and parity-route (r, k)-criticality
with deficiency certificates, finding explicit [a, b]-factors, running
the verification battery, and searching for conjecture counterexamples.

Graph input is graph6, one graph per line, so exhaustive corpora pipe
through standard tools; an edge-list file holds a single graph instead
(use --format edge-list).  Analysis verbs emit one JSON object per input
graph by default, with csv and text as alternatives.  Corpus processing
may be parallelized with --parallel N (env FACTOR_SPECTRA_THREADS is the
fallback), and output order always matches input order.

Exit codes: 0 success (all checks passed, all graphs critical when
--expect-critical is set), 1 a check or expectation failed, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .criticality import (
    FactorParams,
    is_abk_critical,
    is_fractional_abk_critical,
    is_rk_critical,
)
from .factors import find_ab_factor, find_fractional_factor
from .families import (
    ExtremalParams,
    base_join_graph,
    enumerate_family,
    extremal_graph,
)
from .graphs import Graph, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .harness import battery_plan, explore_conjecture, run_check
from .spectral import ConvergenceError, hong_bound, spectral_radius


# -- input plumbing --------------------------------------------------------------


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _graph6_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def _load_corpus(args) -> list[Graph]:
    """Parsed input graphs: one per graph6 line, or a single graph from
    an edge-list file."""
    text = _read_input(args.infile)
    if args.format == "edge-list":
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in _graph6_lines(text)]


def _resolve_parallel(args) -> int:
    if getattr(args, "parallel", None) is not None:
        return max(1, args.parallel)
    env = os.environ.get("FACTOR_SPECTRA_THREADS", "")
    if env.strip():
        try:
            return max(1, int(env))
        except ValueError:
            raise SystemExit(f"FACTOR_SPECTRA_THREADS must be an integer, got {env!r}")
    return 1


def _map_records(fn, graphs: list[Graph], workers: int) -> list[dict]:
    if workers <= 1 or len(graphs) <= 1:
        return [fn(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, graphs, chunksize=max(1, len(graphs) // (4 * workers))))


# -- per-graph workers (module level so they pickle for process pools) ------------


def _record_lambda(g: Graph, tol: float, max_iter: int) -> dict:
    rep = spectral_radius(g, tol=tol, max_iter=max_iter)
    return {
        "n": g.n,
        "lambda": rep.lam,
        "residual": rep.residual,
        "iterations": rep.iterations,
        "connected": rep.connected,
    }


def _record_hong(g: Graph) -> dict:
    bound = hong_bound(g)
    lam = spectral_radius(g).lam
    return {
        "n": g.n,
        "edge_count": g.edge_count,
        "min_degree": g.min_degree(),
        "bound": bound,
        "lambda": lam,
        "slack": bound - lam,
    }


def _record_decide(g: Graph, route: str, a: int, b: int, k: int, r: int) -> dict:
    if route == "integral":
        cert = is_abk_critical(g, FactorParams(a, b, k))
    elif route == "fractional":
        cert = is_fractional_abk_critical(g, FactorParams(a, b, k))
    else:
        cert = is_rk_critical(g, r, k)
    return {
        "critical": cert is None,
        "certificate": None if cert is None else cert.to_json(),
    }


def _record_factor(g: Graph, a: int, b: int, fractional: bool) -> dict:
    finder = find_fractional_factor if fractional else find_ab_factor
    witness = finder(g, a, b)
    return {
        "exists": witness is not None,
        "witness": None if witness is None else witness.to_json(),
    }


def _run_planned(item: tuple[str, dict]) -> dict:
    name, kwargs = item
    return run_check(name, kwargs).to_json()


# -- output plumbing ---------------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _emit_records(records: list[dict], out: str, columns: list[str], texter) -> None:
    if out == "json":
        for rec in records:
            print(json.dumps(rec))
    elif out == "csv":
        print(",".join(columns))
        for rec in records:
            print(",".join(_cell(rec.get(c)) for c in columns))
    else:
        for rec in records:
            print(texter(rec))


def _decide_columns_flatten(rec: dict) -> dict:
    cert = rec["certificate"] or {}
    return {
        "critical": rec["critical"],
        "kind": cert.get("kind"),
        "s_set": cert.get("s_set"),
        "t_set": cert.get("t_set"),
        "deficiency": cert.get("deficiency"),
    }


def _decide_text(rec: dict) -> str:
    if rec["critical"]:
        return "critical"
    cert = rec["certificate"]
    return (
        f"not critical: S={cert['s_set']} T={cert['t_set']} "
        f"deficiency={cert['deficiency']}"
    )


# -- verbs -----------------------------------------------------------------------


def _cmd_construct(args) -> int:
    params = ExtremalParams(args.a, args.b, args.k, args.n)
    if args.what == "F":
        graphs = [extremal_graph(params)]
    elif args.what == "base":
        graphs = [base_join_graph(params)]
    else:
        graphs = list(enumerate_family(params))
    first = True
    for g in graphs:
        if args.out == "json":
            print(json.dumps({"n": g.n, "edge_count": g.edge_count, "graph6": to_graph6(g)}))
        elif args.out == "edge-list":
            if not first:
                print()
            print(to_edge_list(g), end="")
        else:
            print(to_graph6(g))
        first = False
    return 0


def _cmd_lambda(args) -> int:
    graphs = _load_corpus(args)
    fn = partial(_record_lambda, tol=args.tol, max_iter=args.max_iter)
    records = _map_records(fn, graphs, _resolve_parallel(args))
    _emit_records(
        records,
        args.out,
        ["n", "lambda", "residual", "iterations", "connected"],
        lambda r: f"n={r['n']} lambda={r['lambda']:.12f} residual={r['residual']:.3e}",
    )
    return 0


def _cmd_hong(args) -> int:
    graphs = _load_corpus(args)
    records = _map_records(_record_hong, graphs, _resolve_parallel(args))
    _emit_records(
        records,
        args.out,
        ["n", "edge_count", "min_degree", "bound", "lambda", "slack"],
        lambda r: (
            f"n={r['n']} m={r['edge_count']} bound={r['bound']:.12f} "
            f"lambda={r['lambda']:.12f} slack={r['slack']:.3e}"
        ),
    )
    return 0


def _cmd_decide(args, route: str) -> int:
    graphs = _load_corpus(args)
    if route == "parity":
        fn = partial(_record_decide, route=route, a=0, b=0, k=args.k, r=args.r)
    else:
        fn = partial(_record_decide, route=route, a=args.a, b=args.b, k=args.k, r=0)
    records = _map_records(fn, graphs, _resolve_parallel(args))
    if args.out == "csv":
        flat = [_decide_columns_flatten(r) for r in records]
        _emit_records(flat, "csv", ["critical", "kind", "s_set", "t_set", "deficiency"], None)
    else:
        _emit_records(records, args.out, [], _decide_text)
    if args.expect_critical and not all(r["critical"] for r in records):
        failing = sum(1 for r in records if not r["critical"])
        print(f"{failing} of {len(records)} graphs are not critical", file=sys.stderr)
        return 1
    return 0


def _cmd_factor(args) -> int:
    graphs = _load_corpus(args)
    fn = partial(_record_factor, a=args.a, b=args.b, fractional=args.fractional)
    records = _map_records(fn, graphs, _resolve_parallel(args))
    _emit_records(
        records,
        args.out,
        ["exists"],
        lambda r: "factor exists" if r["exists"] else "no factor",
    )
    return 0


def _cmd_verify(args) -> int:
    plan = battery_plan(args.level, seed=args.seed)
    workers = _resolve_parallel(args)
    start = time.monotonic()
    if workers <= 1:
        results = [_run_planned(item) for item in plan]
        for rec in results:
            print(json.dumps(rec))
    else:
        results = []
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for rec in ex.map(_run_planned, plan, chunksize=1):
                results.append(rec)
                print(json.dumps(rec))
    elapsed = time.monotonic() - start
    width = max(len(r["check_id"]) for r in results)
    for rec in results:
        brief = " ".join(
            f"{k}={v}" for k, v in rec["params"].items()
            if not isinstance(v, (list, tuple, dict))
        )
        print(f"{rec['check_id']:<{width}}  {rec['status']:<18} {brief}", file=sys.stderr)
    counts = {"pass": 0, "fail": 0, "hypothesis_not_met": 0}
    for rec in results:
        counts[rec["status"]] += 1
    print(
        f"{len(results)} checks: {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['hypothesis_not_met']} hypothesis_not_met ({elapsed:.1f}s)",
        file=sys.stderr,
    )
    return 1 if counts["fail"] else 0


def _cmd_explore(args) -> int:
    result = explore_conjecture(args.r, args.k, args.n, args.budget, seed=args.seed)
    print(json.dumps(result.to_json()))
    return 0 if result.status == "pass" else 1


def _cmd_convert(args) -> int:
    text = _read_input(args.infile)
    if args.format == "edge-list":
        graphs = [parse_edge_list(text)]
    else:
        graphs = [parse_graph6(line) for line in _graph6_lines(text)]
    first = True
    for g in graphs:
        if args.out == "edge-list":
            if not first:
                print()
            print(to_edge_list(g), end="")
        else:
            print(to_graph6(g))
        first = False
    return 0


# -- parser ----------------------------------------------------------------------


def _normalize_format(value: str) -> str:
    return "graph6" if value in ("g6", "graph6") else value


def _add_input_flags(p, parallel: bool = True) -> None:
    p.add_argument("--in", dest="infile", default=None, metavar="PATH",
                   help="input file, one graph6 per line (default stdin; '-' is stdin)")
    p.add_argument("--format", type=_normalize_format, choices=["graph6", "g6", "edge-list"],
                   default="graph6", help="input format; edge-list holds one graph (default graph6)")
    if parallel:
        p.add_argument("--parallel", type=int, default=None, metavar="N",
                       help="worker processes for corpus input (default FACTOR_SPECTRA_THREADS or 1)")


def _add_output_flag(p) -> None:
    p.add_argument("--out", choices=["json", "csv", "text"], default="json",
                   help="output format (default json, one object per graph)")


def _add_window_flags(p, need_b: bool = True) -> None:
    p.add_argument("--a", type=int, required=True, help="lower degree bound a >= 1")
    if need_b:
        p.add_argument("--b", type=int, required=True, help="upper degree bound b")
    p.add_argument("--k", type=int, default=0, help="deletion count k >= 0 (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factor-spectra",
        description="spectral radius conditions and deficiency certificates "
                    "for degree-constrained factor criticality",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="build the extremal graph, its join base, or the whole family")
    p.add_argument("what", choices=["F", "base", "family"],
                   help="F: distinguished member; base: join without attachment edges; "
                        "family: one representative per isomorphism class")
    _add_window_flags(p)
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--out", type=_normalize_format, choices=["g6", "graph6", "edge-list", "json"],
                   default="graph6", help="output form (default graph6)")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("lambda", help="adjacency spectral radius by power iteration")
    _add_input_flags(p)
    _add_output_flag(p)
    p.add_argument("--tol", type=float, default=1e-10, help="convergence tolerance (default 1e-10)")
    p.add_argument("--max-iter", type=int, default=100000, dest="max_iter",
                   help="iteration cap (default 100000)")
    p.set_defaults(handler=_cmd_lambda)

    p = sub.add_parser("hong", help="degree-based spectral radius bound and observed slack")
    _add_input_flags(p)
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_hong)

    p = sub.add_parser("decide", help="integral (a, b, k)-criticality with certificate")
    _add_window_flags(p)
    _add_input_flags(p)
    _add_output_flag(p)
    p.add_argument("--expect-critical", action="store_true",
                   help="exit 1 if any input graph is not critical")
    p.set_defaults(handler=partial(_cmd_decide, route="integral"))

    p = sub.add_parser("fractional", help="fractional (a, b, k)-criticality with certificate")
    _add_window_flags(p)
    _add_input_flags(p)
    _add_output_flag(p)
    p.add_argument("--expect-critical", action="store_true",
                   help="exit 1 if any input graph is not critical")
    p.set_defaults(handler=partial(_cmd_decide, route="fractional"))

    p = sub.add_parser("rk", help="fractional (r, k)-criticality via the parity route")
    p.add_argument("--r", type=int, required=True, help="target degree r >= 2")
    p.add_argument("--k", type=int, default=0, help="deletion count k >= 0 (default 0)")
    _add_input_flags(p)
    _add_output_flag(p)
    p.add_argument("--expect-critical", action="store_true",
                   help="exit 1 if any input graph is not critical")
    p.set_defaults(handler=partial(_cmd_decide, route="parity"))

    p = sub.add_parser("factor", help="find an explicit [a, b]-factor of each input graph")
    p.add_argument("--a", type=int, required=True, help="lower degree bound a >= 0")
    p.add_argument("--b", type=int, required=True, help="upper degree bound b >= a")
    p.add_argument("--fractional", action="store_true",
                   help="half-integral weights instead of an edge subset")
    _add_input_flags(p)
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--level", choices=["quick", "full"], default="quick",
                   help="battery size (default quick)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    p.add_argument("--parallel", type=int, default=None, metavar="N",
                   help="worker processes (default FACTOR_SPECTRA_THREADS or 1)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("explore", help="search for a spectral-conjecture counterexample")
    p.add_argument("--r", type=int, required=True, help="target degree r >= 2")
    p.add_argument("--k", type=int, default=0, help="deletion count k >= 0 (default 0)")
    p.add_argument("--n", type=int, required=True, help="search order (capped)")
    p.add_argument("--budget", type=int, required=True, help="spectral evaluation budget")
    p.add_argument("--seed", type=int, default=0, help="search seed (default 0)")
    p.set_defaults(handler=_cmd_explore)

    p = sub.add_parser("convert", help="convert between graph6 and edge-list")
    _add_input_flags(p, parallel=False)
    p.add_argument("--out", type=_normalize_format, choices=["g6", "graph6", "edge-list"],
                   default="graph6", help="output format (default graph6)")
    p.set_defaults(handler=_cmd_convert)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv, dispatch, and return the exit code (0 success or pass,
    1 check or expectation failure, 2 usage error)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
