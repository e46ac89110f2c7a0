"""Command line interface: qbc {check,bounds,greedy,solve,emit,verify,bench}."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from .bigraph import (BipartiteGraph, induced_stats, load_edge_list,
                      load_pajek_two_mode, density)
from .bounds import (SizeBounds, balanced_biclique_upper_bound,
                     edge_count_bounds, near_balanced_upper_bound,
                     quasi_clique_upper_bound)
from .errors import QbcError
from .exact import (QUALITY, SIZE, SearchParams, branch_and_bound,
                    sweep_oracle)
from .greedy import greedy_quasi_biclique
from .mip import (BILINEAR, LINEARIZED, add_balance_constraints, build_model1,
                  build_model2, emit_lp, parse_solution_file,
                  verify_assignment, Assignment)
from .quasidef import (as_fraction, is_delta_quasi_biclique,
                       is_epsilon_quasi_biclique, is_gamma_quasi_biclique)


def _load_graph(path: str, fmt: str = "auto") -> BipartiteGraph:
    text = Path(path).read_text()
    if fmt == "auto":
        fmt = "pajek" if text.lstrip().startswith("*") else "edgelist"
    if fmt == "pajek":
        return load_pajek_two_mode(text)
    return load_edge_list(text)


def _parse_vertices(arg: str, labels, count: int, side: str) -> list[int]:
    out = []
    for tok in arg.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.lstrip("-").isdigit():
            out.append(int(tok))
        elif labels is not None and tok in labels:
            out.append(labels.index(tok))
        else:
            raise QbcError(f"unknown {side} vertex {tok!r}")
    for i in out:
        if not 0 <= i < count:
            raise QbcError(f"{side} index {i} out of range [0, {count})")
    return out


def _size_bounds(args, g: BipartiteGraph) -> SizeBounds:
    if getattr(args, "bounds", None):
        a, b, c, d = (int(x) for x in args.bounds.split(","))
        return SizeBounds(a, b, c, d)
    return SizeBounds(
        getattr(args, "min_u", None) or 1,
        getattr(args, "max_u", None) or g.u_count,
        getattr(args, "min_v", None) or 1,
        getattr(args, "max_v", None) or g.v_count)


def cmd_check(args) -> int:
    g = _load_graph(args.input, args.format)
    u = _parse_vertices(args.u, g.u_labels, g.u_count, "U")
    v = _parse_vertices(args.v, g.v_labels, g.v_count, "V")
    sel = induced_stats(g, u, v)
    print(f"selection: |U'|={len(sel.u_set)} |V'|={len(sel.v_set)} "
          f"edges={sel.edges} density={sel.density}")
    if args.gamma is not None:
        ok = is_gamma_quasi_biclique(g, sel, args.gamma)
        print(f"gamma-quasi-biclique (gamma={args.gamma}): {ok}")
    if args.delta is not None:
        ok = is_delta_quasi_biclique(g, sel, args.delta)
        print(f"delta-quasi-biclique (delta={args.delta}): {ok}")
    if args.epsilon is not None:
        ok = is_epsilon_quasi_biclique(g, sel, args.epsilon)
        print(f"epsilon-quasi-biclique (epsilon={args.epsilon}): {ok}")
    return 0


def cmd_bounds(args) -> int:
    g = _load_graph(args.input, args.format)
    m = g.edge_count
    print(f"graph: |U|={g.u_count} |V|={g.v_count} |E|={m} density={density(g)}")
    print(f"quasi-clique size bound:        "
          f"{quasi_clique_upper_bound(m, args.gamma):.4f}")
    print(f"balanced quasi-biclique bound:  "
          f"{balanced_biclique_upper_bound(m, args.gamma):.4f}")
    if args.theta is not None:
        print(f"near-balanced bound (theta={args.theta}): "
              f"{near_balanced_upper_bound(m, args.gamma, args.theta):.4f}")
    sb = _size_bounds(args, g)
    k_min, k_max = edge_count_bounds(g, args.gamma, sb,
                                     use_degree_bounds=args.degree_bounds)
    print(f"edge-count range within bounds {sb}: [{k_min}, {k_max}]")
    return 0


def cmd_greedy(args) -> int:
    g = _load_graph(args.input, args.format)
    res = greedy_quasi_biclique(
        g, args.delta, tau=args.tau,
        restricted_degree=args.restricted_degree, both_sides=args.both_sides)
    sel = res.selection
    print(f"size: {res.total_size} (|U'|={len(sel.u_set)}, |V'|={len(sel.v_set)})")
    print(f"edges: {sel.edges} density: {sel.density}")
    print(f"delta-valid: {res.delta_valid} gamma-valid (1-delta): {res.gamma_valid}")
    print(f"U': {_names(sel.u_set, g.u_labels)}")
    print(f"V': {_names(sel.v_set, g.v_labels)}")
    return 0


def _names(indices, labels):
    if labels is None:
        return " ".join(str(i) for i in indices)
    return " ".join(labels[i] for i in indices)


def cmd_solve(args) -> int:
    g = _load_graph(args.input, args.format)
    params = SearchParams(
        gamma=args.gamma, objective=args.objective,
        size_bounds=_size_bounds(args, g), theta=args.theta,
        pool_limit=args.pool, time_limit=args.time_limit)
    if args.method == "oracle":
        pool = sweep_oracle(g, params)
    else:
        pool = branch_and_bound(g, params)
    if args.json:
        payload = {
            "objective": args.objective,
            "gamma": str(params.gamma),
            "count": len(pool.solutions),
            "truncated": pool.truncated,
            "certified": pool.exhausted,
            "solutions": [
                {"u": list(s.selection.u_set), "v": list(s.selection.v_set),
                 "edges": s.selection.edges, "value": str(s.objective_value)}
                for s in pool.solutions],
        }
        print(json.dumps(payload, indent=2))
        return 0
    if args.tsv:
        print("value\tsize_u\tsize_v\tedges\tu_set\tv_set")
        for s in pool.solutions:
            sel = s.selection
            print(f"{s.objective_value}\t{len(sel.u_set)}\t{len(sel.v_set)}\t"
                  f"{sel.edges}\t{','.join(map(str, sel.u_set))}\t"
                  f"{','.join(map(str, sel.v_set))}")
        return 0
    if pool.infeasible:
        print("no feasible selection")
        return 1
    best = pool.best
    print(f"optimum ({args.objective}): {best.objective_value} "
          f"[{'certified' if best.certified_optimal else 'incumbent'}]")
    print(f"solutions: {len(pool.solutions)}"
          + (" (pool truncated)" if pool.truncated else ""))
    for s in pool.solutions:
        sel = s.selection
        print(f"  ({len(sel.u_set)},{len(sel.v_set)}) edges={sel.edges} "
              f"U'={_names(sel.u_set, g.u_labels)} "
              f"V'={_names(sel.v_set, g.v_labels)}")
    return 0


def _build_instance(args, g: BipartiteGraph):
    sb = _size_bounds(args, g)
    if args.model == "1":
        instance = build_model1(g, args.gamma, sb, form=BILINEAR)
    elif args.model == "1lin":
        instance = build_model1(g, args.gamma, sb, form=LINEARIZED)
    elif args.model == "2":
        instance = build_model2(g, args.gamma, sb)
    else:
        raise QbcError(f"unknown model {args.model!r} (choose 1, 1lin or 2)")
    if args.theta is not None:
        instance = add_balance_constraints(instance, args.theta)
    return instance


def cmd_emit(args) -> int:
    g = _load_graph(args.input, args.format)
    instance = _build_instance(args, g)
    text = emit_lp(instance, allow_quadratic=args.quadratic)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out} ({len(instance.variables)} variables, "
              f"{len(instance.constraints)} constraints)")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    instance = _build_instance(args, g)
    assignment = parse_solution_file(Path(args.solution).read_text(), instance)
    sel = verify_assignment(g, instance, assignment, args.gamma)
    print(f"assignment verified: ({len(sel.u_set)},{len(sel.v_set)}) "
          f"edges={sel.edges} density={sel.density}")
    return 0


def cmd_bench(args) -> int:
    config = bench_mod.BenchConfig.from_toml(args.config)
    if config.solver_cmd is None:
        config.solver_cmd = os.environ.get("QBC_SOLVER_CMD")
    rows = bench_mod.run_suite(config)
    csv_text = bench_mod.render_csv(rows)
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.report:
        if args.compare:
            comps = bench_mod.reference_comparison(rows)
            Path(args.report).write_text(
                bench_mod.render_comparison_markdown(comps))
        else:
            Path(args.report).write_text(bench_mod.render_markdown(rows))
    return 0


def _fraction(value):
    return as_fraction(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbc",
        description="Maximum gamma-quasi-biclique search in bipartite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="graph file")
        p.add_argument("--format", choices=["auto", "edgelist", "pajek"],
                       default="auto")

    p = sub.add_parser("check", help="validate a selection against the criteria")
    add_input(p)
    p.add_argument("--u", required=True, help="comma-separated U indices or labels")
    p.add_argument("--v", required=True, help="comma-separated V indices or labels")
    p.add_argument("--gamma", type=_fraction)
    p.add_argument("--delta", type=_fraction)
    p.add_argument("--epsilon", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="print size and edge-count bounds")
    add_input(p)
    p.add_argument("--gamma", type=_fraction, required=True)
    p.add_argument("--theta", type=_fraction)
    p.add_argument("--bounds", help="size bounds a,b,c,d")
    p.add_argument("--degree-bounds", action="store_true",
                   help="enable the experimental degree-sum edge lower bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("greedy", help="two-phase greedy heuristic")
    add_input(p)
    p.add_argument("--delta", type=_fraction, required=True)
    p.add_argument("--tau", type=int)
    p.add_argument("--restricted-degree", action="store_true")
    p.add_argument("--both-sides", action="store_true")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("solve", help="exact maximum quasi-biclique search")
    add_input(p)
    p.add_argument("--objective", choices=[SIZE, QUALITY], default=SIZE)
    p.add_argument("--gamma", type=_fraction, required=True)
    p.add_argument("--theta", type=_fraction)
    p.add_argument("--min-u", type=int)
    p.add_argument("--max-u", type=int)
    p.add_argument("--min-v", type=int)
    p.add_argument("--max-v", type=int)
    p.add_argument("--pool", type=int, default=10)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--method", choices=["bb", "oracle"], default="bb")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("emit", help="emit a model in LP format")
    add_input(p)
    p.add_argument("--model", required=True, choices=["1", "1lin", "2"])
    p.add_argument("--gamma", type=_fraction, required=True)
    p.add_argument("--theta", type=_fraction)
    p.add_argument("--bounds", help="size bounds a,b,c,d")
    p.add_argument("--quadratic", action="store_true",
                   help="allow bilinear constraint emission")
    p.add_argument("--out")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("verify", help="verify a solver solution file")
    add_input(p)
    p.add_argument("--model", required=True, choices=["1", "1lin", "2"])
    p.add_argument("--gamma", type=_fraction, required=True)
    p.add_argument("--theta", type=_fraction)
    p.add_argument("--bounds", help="size bounds a,b,c,d")
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run the benchmark suite")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--report", help="Markdown report path")
    p.add_argument("--compare", action="store_true",
                   help="annotate against previously reported results")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QbcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
