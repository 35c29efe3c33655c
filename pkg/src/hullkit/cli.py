"""Command-line interface.

Subcommands: gen (write a seeded point file), hull (run one builder on a
point file), bench (timed sweeps to CSV), fit (power-law fit over CSV
columns), verify (differential check of every builder against the
oracle) and report (render figures alongside CSV).  Exit codes: 0 ok,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .anchored import AtOptions
from .bench import (
    ALGO_NAMES,
    DIST_NAMES,
    BenchConfig,
    VerificationError,
    fit_power_law,
    median_by_x,
    read_csv_rows,
    run_algorithm,
    run_bench,
    verify_equivalence,
    write_csv,
)
from .bucketed import BucketOptions
from .datagen import generate
from .geometry import EmptyInputError
from .pointio import read_points, write_hull, write_points


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullkit", description="Convex-hull builders and benchmarks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded point file")
    gen.add_argument("--dist", required=True, choices=DIST_NAMES)
    gen.add_argument("--n", required=True, type=int)
    gen.add_argument("--seed", required=True, type=int)
    gen.add_argument("--out", required=True)

    hull = sub.add_parser("hull", help="compute one hull from a point file")
    hull.add_argument("--algo", required=True, choices=ALGO_NAMES)
    hull.add_argument("--mode", type=int, default=8, choices=(4, 6, 8))
    hull.add_argument("--no-dichotomy", dest="dichotomy", action="store_false")
    hull.add_argument("--no-side-buffers", dest="side_buffers", action="store_false")
    hull.add_argument("--no-triangle-filter", dest="triangle_filter", action="store_false")
    hull.add_argument("--no-midpoint-split", dest="midpoint_split", action="store_false")
    hull.add_argument("--in", dest="input_path", required=True)
    hull.add_argument("--out", required=True)

    bench = sub.add_parser("bench", help="timed sweep over algorithms and sizes")
    bench.add_argument("--algos", required=True, help="comma-separated algorithm names")
    bench.add_argument("--dist", required=True, choices=DIST_NAMES)
    bench.add_argument("--n-list", required=True, help="comma-separated point counts")
    bench.add_argument("--reps", required=True, type=int)
    bench.add_argument("--seed", required=True, type=int)
    bench.add_argument("--mode", type=int, default=8, choices=(4, 6, 8))
    bench.add_argument("--verify", action="store_true")
    bench.add_argument("--csv", required=True)

    fit = sub.add_parser("fit", help="power-law fit of one CSV column vs another")
    fit.add_argument("--csv", required=True)
    fit.add_argument("--x", required=True)
    fit.add_argument("--y", required=True)
    fit.add_argument(
        "--where",
        action="append",
        default=[],
        metavar="COL=VALUE",
        help="keep only rows where COL equals VALUE (repeatable)",
    )

    verify = sub.add_parser("verify", help="differential check against the oracle")
    verify.add_argument("--dist", required=True, choices=DIST_NAMES)
    verify.add_argument("--n", required=True, type=int)
    verify.add_argument("--reps", required=True, type=int)
    verify.add_argument("--seed", required=True, type=int)
    verify.add_argument("--dump-dir", default=".")

    report = sub.add_parser("report", help="render experiment figures and CSV")
    report.add_argument("--out-dir", required=True)
    report.add_argument("--seed", type=int, default=1)
    report.add_argument(
        "--full", action="store_true", help="larger sweep sizes (slower)"
    )
    return parser


def _cmd_gen(args) -> int:
    if args.n < 0:
        print("gen: --n must be non-negative", file=sys.stderr)
        return 2
    points = generate(args.dist, args.n, args.seed)
    write_points(args.out, points)
    print(f"wrote {len(points)} points to {args.out}")
    return 0


def _cmd_hull(args) -> int:
    points = read_points(args.input_path)
    if len(points) == 0:
        print("hull: input contains no points", file=sys.stderr)
        return 2
    at_opts = AtOptions(dichotomy=args.dichotomy, side_buffers=args.side_buffers)
    bucket_opts = BucketOptions(
        triangle_filter=args.triangle_filter, midpoint_split=args.midpoint_split
    )
    hull, stats = run_algorithm(
        args.algo, points, args.mode, at_opts=at_opts, bucket_opts=bucket_opts
    )
    write_hull(args.out, hull)
    print(
        f"{args.algo}: n={len(points)} h={len(hull)} "
        f"n_prime={stats.n_prime_seen} max_temp_hull={stats.max_temp_hull} "
        f"orientation_calls={stats.orientation_calls}"
    )
    return 0


def _cmd_bench(args, parser) -> int:
    algos = tuple(a.strip() for a in args.algos.split(",") if a.strip())
    for a in algos:
        if a not in ALGO_NAMES:
            parser.error(f"unknown algorithm {a!r} (choose from {', '.join(ALGO_NAMES)})")
    try:
        n_list = tuple(int(v) for v in args.n_list.split(",") if v.strip())
    except ValueError:
        parser.error("--n-list must be comma-separated integers")
    if not algos or not n_list:
        parser.error("--algos and --n-list must be non-empty")
    config = BenchConfig(
        algos=algos,
        dist=args.dist,
        n_list=n_list,
        reps=args.reps,
        seed_base=args.seed,
        mode=args.mode,
        verify=args.verify,
    )
    try:
        records = run_bench(config)
    except VerificationError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return 1
    write_csv(args.csv, records)
    print(f"wrote {len(records)} records to {args.csv}")
    return 0


def _cmd_fit(args, parser) -> int:
    rows = read_csv_rows(args.csv)
    if not rows:
        parser.error(f"{args.csv} has no data rows")
    for clause in args.where:
        if "=" not in clause:
            parser.error(f"--where expects COL=VALUE, got {clause!r}")
        col, value = clause.split("=", 1)
        if col not in rows[0]:
            parser.error(f"no column {col!r} in {args.csv}")
        rows = [r for r in rows if r[col] == value]
    if not rows:
        parser.error("no rows left after --where filters")
    for col in (args.x, args.y):
        if col not in rows[0]:
            parser.error(f"no column {col!r} in {args.csv}")
    xs, ys = median_by_x(rows, args.x, args.y)
    try:
        fit = fit_power_law(xs, ys)
    except ValueError as exc:
        parser.error(str(exc))
    print(
        f"fit {args.y} ~ coefficient * {args.x}^exponent: "
        f"exponent={fit.exponent:.6g} coefficient={fit.coefficient:.6g} r2={fit.r2:.6g}"
    )
    return 0


def _cmd_verify(args) -> int:
    if args.n < 1 or args.reps < 1:
        print("verify: --n and --reps must be positive", file=sys.stderr)
        return 2
    report = verify_equivalence(args.dist, args.n, args.reps, args.seed, args.dump_dir)
    for inst in report.instances:
        if inst.passed:
            print(f"seed={inst.seed} n={inst.n} h={inst.h}: PASS")
        else:
            print(
                f"seed={inst.seed} n={inst.n} h={inst.h}: "
                f"FAIL ({', '.join(inst.failed_algos)})"
            )
    passed = sum(1 for inst in report.instances if inst.passed)
    print(f"{passed}/{len(report.instances)} instances passed")
    return 0 if report.all_passed else 1


def _cmd_report(args) -> int:
    from .report import pruning_report, runtime_report

    if args.full:
        prune_ns: tuple[int, ...] = (10**3, 10**4, 10**5, 10**6)
        square_ns: tuple[int, ...] = (10**4, 10**5, 10**6)
        circle_ns: tuple[int, ...] = (2**10, 2**11, 2**12, 2**13)
        seeds, reps = 10, 5
    else:
        prune_ns = (10**3, 10**4, 10**5)
        square_ns = (10**4, 3 * 10**4, 10**5)
        circle_ns = (2**10, 2**11, 2**12)
        seeds, reps = 5, 3
    prune_fits = pruning_report(args.out_dir, prune_ns, seeds=seeds, seed_base=args.seed)
    for mode, fit in prune_fits.items():
        print(f"pruning {mode.name.lower()}: survivor exponent {fit.exponent:.3f}")
    time_fits = runtime_report(
        args.out_dir, square_ns=square_ns, circle_ns=circle_ns, reps=reps, seed_base=args.seed
    )
    for panel, by_algo in time_fits.items():
        for algo, fit in by_algo.items():
            print(f"runtime {panel} {algo}: time exponent {fit.exponent:.3f}")
    print(f"report written to {args.out_dir}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "hull":
            return _cmd_hull(args)
        if args.command == "bench":
            return _cmd_bench(args, parser)
        if args.command == "fit":
            return _cmd_fit(args, parser)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_report(args)
    except EmptyInputError as exc:
        print(f"hullkit: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"hullkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
