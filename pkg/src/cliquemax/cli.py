"""Command-line front end.

Exit status: 0 when the run completed and every checked claim holds, 1 when
a claim is violated, 2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from datetime import datetime, timezone
from math import comb
from pathlib import Path

from . import __version__
from .cache import CliqueCountCache, cached_count_cliques
from .counting import clique_counts, k3_upper_bound, triangle_complement_identity
from .enumeration import EnumerationConfig, enumerate_graphs
from .graph import complement
from .graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_lines, write_graph6_lines
from .kkbounds import f_t, f_t_convexity_check, kk_clique_bound, kk_oracle_table
from .report import VerificationReport, report_write
from .search import SearchInterrupted, config_hash, search_open_conjecture
from .smoothing import extreme_objective, random_state, smooth_to_extreme
from .verify import DEFAULT_WITNESS_LIMIT, ParameterError, verify_prop_range, verify_theorem_range

log = logging.getLogger("cliquemax")


class UsageError(Exception):
    pass


def _graphs_from_arg(value: str):
    """``--graph6`` takes a graph6 string or a path to a newline-delimited file."""
    path = Path(value)
    if path.is_file():
        with path.open() as fh:
            return list(read_graph6_lines(fh))
    try:
        return [graph6_decode(value)]
    except Graph6Error as exc:
        raise UsageError(f"--graph6: {exc}") from None


def _t_range(args) -> list[int]:
    t_max = args.t_max if args.t_max is not None else args.t
    if t_max < args.t:
        raise UsageError("--t-max must be at least --t")
    return list(range(args.t, t_max + 1))


def _write_json(path, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def _write_manifest(args, out, start: float, artifacts: list[str]) -> None:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "jobs", "verbose")}
    manifest = {
        "subcommand": args.command,
        "parameters": params,
        "config_hash": config_hash({"subcommand": args.command, "params": params}),
        "started": datetime.fromtimestamp(start, timezone.utc).isoformat(),
        "finished": datetime.now(timezone.utc).isoformat(),
        "artifacts": artifacts,
        "version": __version__,
    }
    _write_json(Path(str(out) + ".manifest.json"), manifest)


def _emit_reports(args, reports: list[VerificationReport], start: float, extra=()) -> int:
    for r in reports:
        line = (f"{r.mode} {r.parameters}: predicted={r.predicted_value} observed={r.observed_max} "
                f"class={r.uniqueness_class} witnesses={r.witness_count} examined={r.graphs_examined}")
        if r.scope_warning:
            line += f" [warning: {r.scope_warning}]"
        print(line)
    if args.out:
        report_write(reports[0] if len(reports) == 1 else reports, args.out)
        witness_path = str(args.out) + ".witnesses.g6"
        with open(witness_path, "w") as fh:
            for r in reports:
                for w in r.witnesses:
                    fh.write(w + "\n")
        _write_manifest(args, args.out, start, [str(args.out), witness_path, *extra])
    return 1 if any(r.claim_holds is False for r in reports) else 0


# -- subcommands ---------------------------------------------------------------

def cmd_count(args, start) -> int:
    cache = CliqueCountCache() if args.cache else None
    rows = []
    for g in _graphs_from_arg(args.graph6):
        ts = _t_range(args) if args.t is not None else list(range(g.n + 1))
        if cache is not None:
            cliques = [cached_count_cliques(g, t, cache) for t in ts]
            independent = [cached_count_cliques(complement(g), t, cache) for t in ts]
        else:
            kc, ic = clique_counts(g), clique_counts(complement(g))
            cliques = [kc[t] if t < len(kc) else 0 for t in ts]
            independent = [ic[t] if t < len(ic) else 0 for t in ts]
        rows.append({"graph6": graph6_encode(g), "t": ts,
                     "cliques": [str(c) for c in cliques], "independent_sets": [str(c) for c in independent]})
        print(f"{graph6_encode(g)}: " + " ".join(f"k{t}={c} i{t}={i}" for t, c, i in zip(ts, cliques, independent)))
    if cache is not None:
        cache.save()
    if args.out:
        _write_json(args.out, {"subcommand": "count", "results": rows})
        _write_manifest(args, args.out, start, [str(args.out)])
    return 0


def cmd_identity(args, start) -> int:
    rows = []
    ok = True
    for g in _graphs_from_arg(args.graph6):
        lhs, rhs, holds = triangle_complement_identity(g)
        ok &= holds
        rows.append({"graph6": graph6_encode(g), "lhs": str(lhs), "rhs": str(rhs), "holds": holds,
                     "k3_upper_bound": str(k3_upper_bound(g))})
        print(f"{graph6_encode(g)}: lhs={lhs} rhs={rhs} holds={holds} k3_bound={k3_upper_bound(g)}")
    if args.out:
        _write_json(args.out, {"subcommand": "identity", "results": rows})
        _write_manifest(args, args.out, start, [str(args.out)])
    return 0 if ok else 1


def cmd_kk_check(args, start) -> int:
    n_max = args.n
    ks = _t_range(args)
    if min(ks) < 3:
        raise UsageError("--t (clique order k) must be at least 3")
    table = kk_oracle_table(n_max, ks)
    rows = []
    ok = True
    for k in ks:
        for m in range(comb(n_max, 2) + 1):
            best = table[m, k]
            bound = kk_clique_bound(m, k)
            holds = bound >= best
            ok &= holds
            rows.append({"m": m, "k": k, "oracle": str(best), "bound": list(bound.to_triple()),
                         "bound_approx": float(bound), "holds": holds, "tight": bound == best})
            print(f"m={m:3d} k={k}: oracle={best} bound~{float(bound):.4f} holds={holds} tight={bound == best}")
    if args.out:
        _write_json(args.out, {"subcommand": "kk-check", "n_max": n_max, "results": rows})
        _write_manifest(args, args.out, start, [str(args.out)])
    return 0 if ok else 1


def cmd_ft(args, start) -> int:
    t = args.t
    if t < 3:
        raise UsageError("--t must be at least 3")
    grid = list(range(args.n + 1))
    rows = []
    for x in grid:
        b = f_t(x, t)
        rows.append({"x": x, "branch": b.branch, "value": list(b.value.to_triple()), "approx": float(b.value)})
        print(f"f_{t}({x}) = {b.value}  (~{float(b.value):.6f}, {b.branch})")
    report = f_t_convexity_check(t, grid)
    ok = report.convex and report.monotone
    if t >= 4:
        ok &= report.strictly_convex_above and report.strictly_increasing_above
    print(f"convex={report.convex} strictly_convex_above_{report.strict_above}={report.strictly_convex_above} "
          f"monotone={report.monotone}")
    if args.out:
        _write_json(args.out, {"subcommand": "ft", "t": t, "values": rows,
                               "convex": report.convex, "strictly_convex_above": report.strictly_convex_above,
                               "monotone": report.monotone, "failures": report.failures})
        _write_manifest(args, args.out, start, [str(args.out)])
    return 0 if ok else 1


def cmd_verify_theorem(args, start) -> int:
    reports = verify_theorem_range(args.n, args.delta, _t_range(args), args.witness_limit)
    return _emit_reports(args, reports, start)


def cmd_verify_prop(args, start) -> int:
    reports = verify_prop_range(args.delta, args.b, _t_range(args), args.witness_limit)
    return _emit_reports(args, reports, start)


def cmd_search_open(args, start) -> int:
    ledger = Path(str(args.out) + ".ledger.jsonl") if args.out else None
    if args.resume and args.fresh:
        raise UsageError("--resume and --fresh are mutually exclusive")
    try:
        report = search_open_conjecture(args.a, args.delta, args.b, args.t, jobs=args.jobs,
                                        ledger_path=ledger, resume=not args.fresh,
                                        witness_limit=args.witness_limit)
    except SearchInterrupted as exc:
        print(f"interrupted: {exc}", file=sys.stderr)
        return 1
    print(f"construction attains max: {report.details['construction_attains_max']}")
    return _emit_reports(args, [report], start, extra=[str(ledger)] if ledger else [])


def cmd_smooth_demo(args, start) -> int:
    rng = random.Random(args.seed)
    trials = args.n if args.n is not None else 100
    expected = extreme_objective(args.delta, args.b, args.t)
    rows = []
    ok = True
    for _ in range(trials):
        result = smooth_to_extreme(random_state(args.delta, args.b, args.t, rng))
        final_ok = result.objective_trace[-1] == expected
        ok &= result.monotone and final_ok
        rows.append({"monotone": result.monotone, "final_matches": final_ok,
                     "push_steps": result.push_steps, "raise_steps": result.raise_steps,
                     "final_xs": [str(x) for x in result.final_xs]})
    print(f"{trials} runs: all monotone={all(r['monotone'] for r in rows)} "
          f"all final objectives = {expected}: {all(r['final_matches'] for r in rows)}")
    if args.out:
        _write_json(args.out, {"subcommand": "smooth-demo", "expected_objective": str(expected), "runs": rows})
        _write_manifest(args, args.out, start, [str(args.out)])
    return 0 if ok else 1


def cmd_enumerate(args, start) -> int:
    if args.delta is None:
        config = EnumerationConfig(args.n)
    elif args.mode == "min":
        config = EnumerationConfig.min_degree(args.n, args.delta)
    else:
        config = EnumerationConfig.max_degree(args.n, args.delta)
    graphs = enumerate_graphs(config)
    if args.out:
        with open(args.out, "w") as fh:
            count = write_graph6_lines(fh, graphs)
        _write_manifest(args, args.out, start, [str(args.out)])
    else:
        count = write_graph6_lines(sys.stdout, graphs)
    print(f"{count} graphs", file=sys.stderr)
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquemax", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write a structured report here")
        return p

    p = add("count", cmd_count, "clique and independent-set counts of graph6 input")
    p.add_argument("--graph6", required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--t-max", type=int)
    p.add_argument("--cache", action="store_true", help="memoise counts by certificate")

    p = add("identity", cmd_identity, "check the triangle/complement identity")
    p.add_argument("--graph6", required=True)

    p = add("kk-check", cmd_kk_check, "compare exhaustive clique maxima with the Kruskal-Katona bound")
    p.add_argument("--n", type=int, default=8, help="largest vertex count")
    p.add_argument("--t", type=int, default=3, help="clique order k")
    p.add_argument("--t-max", type=int)

    p = add("ft", cmd_ft, "tabulate f_t on 0..n and check convexity")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, default=200)

    p = add("verify-theorem", cmd_verify_theorem, "max independent t-sets under a minimum degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--t-max", type=int)
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT)

    p = add("verify-prop", cmd_verify_prop, "max t-cliques under a maximum degree, n = Delta+1+b")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--t-max", type=int)
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT)

    p = add("search-open", cmd_search_open, "exhaustive search, n = a(Delta+1)+b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--resume", action="store_true", help="continue from the ledger (default)")
    p.add_argument("--fresh", action="store_true", help="ignore and replace the ledger")
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT)

    p = add("smooth-demo", cmd_smooth_demo, "run the smoothing procedure on random states")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, help="number of random states (default 100)")
    p.add_argument("--seed", type=int, default=0)

    p = add("enumerate", cmd_enumerate, "write one graph per isomorphism class as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, help="degree bound")
    p.add_argument("--mode", choices=("max", "min"), default="max")
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    start = time.time()
    try:
        return args.func(args, start)
    except (UsageError, ParameterError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
