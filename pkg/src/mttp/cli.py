"""Command-line interface: ``solve``, ``validate``, ``bench`` (and ``oracle``).

Exit codes: 0 success / feasible, 1 usage or input error, 2 no feasible
schedule found, 3 schedule infeasible.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .annealer import BACKENDS, HAVE_COMPILED, ConfigError, SAConfig
from .instance import InstanceError, load_instance, make_circular_instance
from .oracle import OracleSizeError, enumerate_feasible
from .parallel import RunConfig, benchmark, run_psa
from .schedule import (ScheduleFormatError, check_schedule, parse_schedule,
                       render_schedule, travel_distance)

EXIT_OK, EXIT_USAGE, EXIT_NO_FEASIBLE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_instance_flags(p, required=True):
    p.add_argument("--instance", metavar="PATH", help="instance file (n, then n*n distances)")
    p.add_argument("--circ", type=int, metavar="N", help="use the generated CIRC instance")
    p.add_argument("--k", type=int, default=3, help="AtMost bound (default 3)")


def _add_sa_flags(p):
    d = SAConfig()
    p.add_argument("--t-initial", type=float, default=d.t_initial)
    p.add_argument("--t-final", type=float, default=d.t_final)
    p.add_argument("--alpha", type=float, default=d.alpha)
    p.add_argument("--iterations", type=int, default=d.n_iterations,
                   help="outer reheating iterations")
    p.add_argument("--burn-in", type=int, default=None,
                   help="random moves applied to the initial schedule (default 20*n)")
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--backend", choices=BACKENDS, default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mttp", description="Mirrored TTP solver (parallel simulated annealing).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser,
                                metavar="{solve,validate,bench}")

    p = sub.add_parser("solve", help="run PSA(T) and write the best schedule")
    _add_instance_flags(p)
    _add_sa_flags(p)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", metavar="PATH", help="write the best schedule here")
    p.add_argument("--metrics", metavar="PATH", help="write a JSON metrics record here")

    p = sub.add_parser("validate", help="check a schedule file against an instance")
    _add_instance_flags(p)
    p.add_argument("--schedule", metavar="PATH", required=True)

    p = sub.add_parser("bench", help="throughput and speedup across thread counts")
    _add_instance_flags(p)
    _add_sa_flags(p)
    p.add_argument("--threads-list", default="1,2,4", help="comma-separated, must include 1")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--data", metavar="PATH", help="write raw samples as CSV here")

    # used to produce test constants; not advertised in --help
    p = sub.add_parser("oracle")
    _add_instance_flags(p)
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "oracle"]
    return parser


def _instance(args):
    if (args.instance is None) == (args.circ is None):
        raise UsageError("exactly one of --instance or --circ is required")
    if args.circ is not None:
        return make_circular_instance(args.circ, args.k)
    return load_instance(args.instance, args.k)


def _sa(args) -> SAConfig:
    return SAConfig(args.t_initial, args.t_final, args.alpha, args.iterations,
                    args.burn_in, args.seed)


def metrics_record(stats) -> dict:
    return {
        "instance": stats.instance,
        "threads": stats.threads,
        "seed": stats.sa.seed,
        "sa_config": asdict(stats.sa),
        "best_distance": stats.best_dist,
        "feasible": stats.feasible,
        "best_replica": stats.best_replica,
        "total_solutions_explored": stats.total_solutions_explored,
        "wall_elapsed_seconds": stats.wall_elapsed_seconds,
        "solutions_per_second": stats.solutions_per_second,
        "per_replica": [asdict(r) for r in stats.per_replica],
    }


def cmd_solve(args) -> int:
    inst = _instance(args)
    cfg = RunConfig(args.threads, _sa(args), inst.name, args.backend)
    result, stats = run_psa(inst, cfg)
    if args.metrics:
        Path(args.metrics).write_text(json.dumps(metrics_record(stats), indent=2) + "\n")
    if not result.found:
        print(f"no feasible schedule found ({stats.total_solutions_explored} solutions explored)")
        return EXIT_NO_FEASIBLE
    if args.out:
        Path(args.out).write_text(render_schedule(result.best_schedule))
    print(result.best_dist)
    return EXIT_OK


def cmd_validate(args) -> int:
    inst = _instance(args)
    s = parse_schedule(Path(args.schedule).read_text(encoding="utf-8"))
    if s.n != inst.n:
        raise UsageError(f"schedule has {s.n} teams but the instance has {inst.n}")
    feas = check_schedule(s, inst)
    in_range = bool(((abs(s.opp) >= 1) & (abs(s.opp) <= s.n)).all())
    dist = f"distance {travel_distance(s, inst)}" if in_range else "distance undefined"
    print(f"{'feasible' if feas.feasible else 'infeasible'}, {dist}")
    for team, rnd, what in feas.violations:
        where = f"round {rnd}" if rnd else "all rounds"
        print(f"  team {team}, {where}: {what}")
    return EXIT_OK if feas.feasible else EXIT_INFEASIBLE


def cmd_bench(args) -> int:
    inst = _instance(args)
    try:
        threads = [int(x) for x in args.threads_list.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --threads-list {args.threads_list!r}") from None
    rows = benchmark(inst, _sa(args), threads, args.repeats, args.backend)
    kernel = "compiled" if HAVE_COMPILED and args.backend != "python" else "python"
    print(f"{inst.name}  repeats={args.repeats}  kernel={kernel}")
    print(f"{'threads':>7}  {'median sol/s':>14}  {'speedup':>7}")
    for row in rows:
        print(f"{row.threads:>7}  {row.median_solutions_per_second:>14.1f}  {row.speedup:>7.3f}")
    if args.data:
        with open(args.data, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["threads", "repeat", "solutions_per_second", "best_distance"])
            for row in rows:
                for rep, (sps, bd) in enumerate(zip(row.samples, row.best_distances)):
                    w.writerow([row.threads, rep, repr(sps), "" if bd is None else bd])
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _instance(args)
    rep = enumerate_feasible(inst)
    print(f"n={rep.n} k={rep.k} enumerated={rep.schedules_enumerated} "
          f"feasible={rep.count_feasible} optimum={rep.optimum_distance}")
    if rep.optimum_schedule is not None:
        print(render_schedule(rep.optimum_schedule), end="")
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "validate": cmd_validate, "bench": cmd_bench,
            "oracle": cmd_oracle}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InstanceError, ScheduleFormatError, ConfigError,
            OracleSizeError, OSError) as exc:
        print(f"mttp {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
