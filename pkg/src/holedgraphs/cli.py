"""Command-line front end: generation, coloring, verification, stress
testing, and the feasibility sweep.

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 budget
exceeded.  Oracle budgets honor the HOLED_COLOR_BUDGET environment
variable.  All outputs are deterministic given the flags and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .graphs import (BudgetExceededError, Coloring, Graph,
                     clique_number_bruteforce, coloring_from_json,
                     coloring_to_json, graph_from_json, graph_to_dot,
                     graph_to_json, validate_ell_holed, verify_proper)
from .oracle import DEFAULT_CHROMATIC_BUDGET, exact_chromatic, greedy_fallback
from .structures import (cycle_blowup_dot, cycle_spec_from_json,
                         cycle_spec_to_json, cycle_structural_clique_number,
                         materialize_cycle_blowup, random_cycle_spec)
from .frameworks import (framework_blowup_dot, framework_from_json,
                         framework_structural_clique_number, framework_to_json,
                         materialize_framework_blowup, random_framework)
from .coloring import chi_bound, color_cycle_blowup, color_framework
from .feasibility import summary_table, sweep_feasibility

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _budget(args_budget: Optional[int]) -> int:
    if args_budget is not None:
        return args_budget
    env = os.environ.get("HOLED_COLOR_BUDGET")
    return int(env) if env else DEFAULT_CHROMATIC_BUDGET


def _load_spec(path: str):
    """Returns ("cycle", spec) or ("framework", (spec, asg))."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        kind = json.loads(text).get("kind")
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc}") from exc
    if kind == "cycle":
        return "cycle", cycle_spec_from_json(text)
    if kind == "framework":
        return "framework", framework_from_json(text)
    raise ValueError(f"unknown spec kind {kind!r} in {path}")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "cycle":
        spec = random_cycle_spec(args.ell, args.max_size, args.seed)
        text = cycle_spec_to_json(spec)
        g, _ = materialize_cycle_blowup(spec)
        omega = cycle_structural_clique_number(spec)
        dot = cycle_blowup_dot(spec) if args.dot else None
    else:
        if args.k is None or args.m is None:
            raise ValueError("framework generation needs --k and --m")
        spec, asg = random_framework(args.ell, args.k, args.m,
                                     args.max_size, args.seed)
        text = framework_to_json(spec, asg)
        g, _ = materialize_framework_blowup(spec, asg)
        omega = framework_structural_clique_number(spec, asg)
        dot = framework_blowup_dot(spec, asg) if args.dot else None
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    if dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    print(f"kind={args.kind}, n={g.n}, omega={omega}, out={args.out}")
    return EXIT_PASS


def cmd_color(args: argparse.Namespace) -> int:
    kind, loaded = _load_spec(args.spec)
    budget = _budget(args.budget)
    if kind == "cycle":
        spec = loaded
        g, _ = materialize_cycle_blowup(spec)
        omega = cycle_structural_clique_number(spec)
        bound = chi_bound(spec.ell, omega)
        if args.method in ("auto", "constructive"):
            coloring = color_cycle_blowup(spec)
            method = "cycle_closed_form"
        else:
            _, coloring = exact_chromatic(g, budget=budget)
            method = "fallback_exact"
        ell = spec.ell
    else:
        spec, asg = loaded
        g, _ = materialize_framework_blowup(spec, asg)
        omega = framework_structural_clique_number(spec, asg)
        bound = chi_bound(spec.ell, omega)
        if args.method == "fallback":
            try:
                _, coloring = exact_chromatic(g, budget=budget)
                method = "fallback_exact"
            except BudgetExceededError:
                coloring = greedy_fallback(g)
                method = "fallback_greedy"
        else:
            coloring, method = color_framework(spec, asg, budget=budget)
        ell = spec.ell
    rep = verify_proper(g, coloring)
    if not rep:
        print(f"coloring improper: {rep.detail}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(coloring_to_json(coloring, method) + "\n")
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(graph_to_json(g) + "\n")
    used = coloring.num_colors
    print(f"n={g.n}, omega={omega}, colors={used}, bound={bound}, "
          f"method={method}")
    del ell
    return EXIT_PASS if used <= bound else EXIT_FAIL


def _graph_for_verify(args: argparse.Namespace) -> tuple[Graph, Optional[int]]:
    if args.graph:
        with open(args.graph, "r", encoding="utf-8") as fh:
            return graph_from_json(fh.read()), None
    kind, loaded = _load_spec(args.spec)
    if kind == "cycle":
        g, _ = materialize_cycle_blowup(loaded)
        return g, loaded.ell
    spec, asg = loaded
    g, _ = materialize_framework_blowup(spec, asg)
    return g, spec.ell


def cmd_verify(args: argparse.Namespace) -> int:
    g, spec_ell = _graph_for_verify(args)
    checks: list[dict] = []
    status = "pass"
    if args.coloring:
        with open(args.coloring, "r", encoding="utf-8") as fh:
            coloring = coloring_from_json(fh.read())
        if set(coloring.colors) != set(range(g.n)):
            raise ValueError("coloring vertex set does not match the graph")
        rep = verify_proper(g, coloring)
        checks.append({"check": "properness", "status": rep.status,
                       "witness": rep.witness, "detail": rep.detail})
        if not rep:
            status = "fail"
    if args.holes:
        ell = args.ell or spec_ell
        if ell is None:
            raise ValueError("--holes needs --ell or a spec input")
        rep = validate_ell_holed(g, ell)
        checks.append({"check": "holes", "status": rep.status,
                       "witness": rep.witness, "detail": rep.detail})
        if not rep:
            status = "fail"
    print(json.dumps({"status": status, "n": g.n, "checks": checks}))
    return EXIT_PASS if status == "pass" else EXIT_FAIL


def cmd_stress(args: argparse.Namespace) -> int:
    budget = _budget(args.budget)
    total = failures = skipped = 0
    max_ratio = 0.0
    for ell in args.ell:
        for idx in range(args.count):
            seed = args.seed * 100_003 + 1_000 * ell + idx
            spec = random_cycle_spec(ell, args.max_size, seed)
            g, _ = materialize_cycle_blowup(spec)
            omega = cycle_structural_clique_number(spec)
            bound = chi_bound(ell, omega)
            coloring = color_cycle_blowup(spec)
            total += 1
            ok = bool(verify_proper(g, coloring)) and \
                coloring.num_colors <= bound
            try:
                if clique_number_bruteforce(g, budget=budget) != omega:
                    ok = False
                if args.exact and g.n <= args.exact:
                    chrom, _ = exact_chromatic(g, budget=budget)
                    ok = ok and chrom <= bound
                    max_ratio = max(max_ratio, chrom / bound)
            except BudgetExceededError:
                skipped += 1
                continue
            max_ratio = max(max_ratio, coloring.num_colors / bound)
            if not ok:
                failures += 1
                print(f"FAIL ell={ell} seed={seed}", file=sys.stderr)
    print(f"stress: {total - failures}/{total} pass, {skipped} skipped, "
          f"max chi/bound ratio {max_ratio:.3f}")
    if failures:
        return EXIT_FAIL
    if skipped and total == skipped:
        return EXIT_BUDGET
    return EXIT_PASS


def cmd_appendix(args: argparse.Namespace) -> int:
    for ell in args.ell:
        if ell < 7 or ell % 2 == 0:
            raise ValueError("--ell values must be odd and >= 7")
    report, summary = sweep_feasibility(args.ell, args.omega_max)
    print(summary_table(summary))
    if not report:
        print(f"violation: {report.witness}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holed",
        description="Construct, color, and certify blow-ups whose every "
                    "hole has one fixed odd length.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random spec")
    p.add_argument("kind", choices=("cycle", "framework"))
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--dot")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="color a spec's blow-up")
    p.add_argument("spec")
    p.add_argument("--method", choices=("auto", "constructive", "fallback"),
                   default="auto")
    p.add_argument("--out")
    p.add_argument("--graph-out")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="verify a coloring and/or hole lengths")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--spec")
    p.add_argument("--coloring")
    p.add_argument("--ell", type=int)
    p.add_argument("--holes", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stress", help="randomized end-to-end certification")
    p.add_argument("--ell", type=int, nargs="+", default=[7])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--exact", type=int, default=18,
                   help="exact-chromatic sampling cutoff on n (0 disables)")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("appendix", help="exhaustive feasibility sweep")
    p.add_argument("--ell", type=int, nargs="+", default=[7, 11])
    p.add_argument("--omega-max", type=int, default=200)
    p.set_defaults(func=cmd_appendix)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
