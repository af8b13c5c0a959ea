"""Command line entry point.

Exit codes: 0 ok, 1 verification failure, 2 malformed input,
3 planner inapplicable or oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import dot
from .coloring_model import check_plan
from .errors import BudgetExceeded, PlannerInapplicable, ReplayError, Unreachable
from .generators import gen_instance, gen_multipartite, gen_subcubic
from .graph_core import matching_number
from .oracle import bfs_distance, diameter
from .serialize import FormatError, dumps_instance, dumps_plan, read_instance, read_plan, write_instance
from .sweep import PLANNERS, make_plan, random_instances, run_trial

OK, FAILED, MALFORMED, REFUSED = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_plan(args) -> int:
    inst = read_instance(args.instance)
    try:
        used, plan, _ = make_plan(inst, args.planner)
    except (PlannerInapplicable, BudgetExceeded, Unreachable) as exc:
        _err(f"plan: {exc}")
        return REFUSED
    _emit(dumps_plan(plan), args.output)
    bound = inst.n + matching_number(inst.graph)
    _err(f"planner={used} length={len(plan)} n+mu={bound}")
    return OK


def cmd_verify(args) -> int:
    inst = read_instance(args.instance, degree_plus_two=False)
    plan = read_plan(args.plan)
    try:
        check_plan(plan, inst)
    except ReplayError as exc:
        _err(f"verify: step {exc.index}: {exc}")
        return FAILED
    if args.bound:
        bound = inst.n + matching_number(inst.graph)
        if len(plan) > bound:
            _err(f"verify: length {len(plan)} exceeds n+mu = {bound}")
            return FAILED
    print(f"ok length={len(plan)}")
    return OK


def cmd_oracle(args) -> int:
    inst = read_instance(args.instance, degree_plus_two=False)
    try:
        if args.what == "distance":
            d = bfs_distance(inst, args.budget)
            print("unreachable" if d is None else d)
        else:
            st = diameter(inst.graph, inst.lists, args.budget,
                          require_degree_plus_two=not args.any_lists)
            print(f"colorings={st.vertex_count} connected={st.connected} diameter={st.diameter}")
            if st.witness:
                print(f"witness={list(st.witness[0])} {list(st.witness[1])}")
    except BudgetExceeded as exc:
        _err(f"oracle: {exc}")
        return REFUSED
    except ValueError as exc:
        _err(f"oracle: {exc}")
        return MALFORMED
    return OK


def cmd_gen(args) -> int:
    if args.family == "subcubic":
        g = gen_subcubic(args.n, args.seed)
    else:
        try:
            parts = [int(x) for x in args.parts.split(",")]
        except ValueError:
            _err(f"gen: bad --parts {args.parts!r}")
            return MALFORMED
        if not parts or min(parts) < 1:
            _err("gen: parts must be positive")
            return MALFORMED
        g = gen_multipartite(parts, args.seed)
    _emit(dumps_instance(gen_instance(g, args.seed, extra=args.extra)), args.output)
    return OK


def _trial(job):
    label, family, inst, budget = job
    return run_trial(inst, label, planner=family, budget=budget)


def cmd_check(args) -> int:
    jobs = [(label, family, inst, args.budget)
            for label, family, inst in random_instances(args.max_n, args.trials, args.seed, args.family)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_trial, jobs, chunksize=8))
    else:
        results = [_trial(j) for j in jobs]
    failures = [t for t in results if not t.ok]
    if args.out and failures:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(failures):
            write_instance(t.instance, out / f"failure_{i:04d}.json")
    rows = Counter()
    slack = Counter()
    for t in results:
        rows[t.planner or "?", t.ok] += 1
        if t.ok and t.distance is not None:
            slack[t.planner] = max(slack[t.planner], t.length - t.distance)
    print(f"{'planner':<14}{'ok':>6}{'failed':>8}{'max len-dist':>14}")
    for p in sorted({k[0] for k in rows}):
        print(f"{p:<14}{rows[p, True]:>6}{rows[p, False]:>8}{slack.get(p, 0):>14}")
    for t in failures[:10]:
        print(f"FAIL {t.label}: {t.error}")
    return FAILED if failures else OK


def cmd_export(args) -> int:
    inst = read_instance(args.instance, degree_plus_two=False)
    try:
        text = dot.export(inst, args.what)
    except ValueError as exc:
        _err(f"export: {exc}")
        return MALFORMED
    _emit(text, args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="recolor", description="List-recoloring plans and exact checks.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("plan", help="compute a recoloring plan")
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--planner", choices=PLANNERS, default="auto")
    sp.set_defaults(func=cmd_plan)

    sp = sub.add_parser("verify", help="replay a plan against an instance")
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("-p", "--plan", required=True)
    sp.add_argument("--bound", action="store_true", help="also require length <= n + mu")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="exact distance or diameter by exhaustive search")
    sp.add_argument("what", choices=("distance", "diameter"))
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("--budget", type=int, help="max colorings to enumerate")
    sp.add_argument("--any-lists", action="store_true", help="allow lists shorter than degree + 2")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="write a random instance")
    sp.add_argument("family", choices=("subcubic", "multipartite"))
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--parts", default="2,2,2", help="comma separated part sizes")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--extra", type=int, default=0, help="colors beyond degree + 2")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("check", help="plan, verify and cross-check random instances")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--family", choices=("both", "subcubic", "multipartite"), default="both")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", help="directory for failing instances")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("export", help="graphviz text of conflict structures")
    sp.add_argument("format", choices=("dot",))
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("--what", default="shift", help="shift or color:<c>")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code else OK
    try:
        return args.func(args)
    except FormatError as exc:
        _err(f"{args.command}: {exc}")
        return MALFORMED
    except OSError as exc:
        _err(f"{args.command}: {exc}")
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
