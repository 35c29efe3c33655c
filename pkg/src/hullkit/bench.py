"""Benchmark harness: run builders over seeded datasets, record CSV rows,
fit power laws and evaluate the operation-count models.

One row is emitted per (algo, dist, n, rep) cell; the seed of a cell is
seed_base + rep, shared across algorithms and sizes so outputs stay
comparable row against row.  Timing uses the monotonic clock; everything
except elapsed_ns reproduces exactly for a fixed config.
"""

from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .anchored import AtOptions, build_at_incremental
from .atbox import BoxMode, find_extremes
from .baselines import graham_scan, jarvis_march, monotone_chain, quickhull
from .bucketed import BucketOptions, build_bucketed
from .datagen import Distribution, generate
from .geometry import PointSet
from .hulls import BuildStats, HullIndices, HullResult
from .incremental import build_incremental
from .pointio import write_points

CSV_HEADER = "algo,mode,dist,n,seed,n_prime,p_actual,h,elapsed_ns,max_temp_hull,orientation_calls"

BOX_ALGOS = ("at-basic", "at-opt", "bucketed")
ALGO_NAMES = ("at-basic", "at-opt", "incremental", "bucketed", "graham", "jarvis", "quickhull", "chain")
ORACLE_ALGO = "chain"
DIST_NAMES = tuple(d.value for d in Distribution)


class VerificationError(Exception):
    """A builder disagreed with the oracle during a verified bench run."""


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    mode: int
    dist: str
    n: int
    seed: int
    n_prime: int
    p_actual: int
    h: int
    elapsed_ns: int
    max_temp_hull: int
    orientation_calls: int

    def csv_row(self) -> list:
        return [
            self.algo, self.mode, self.dist, self.n, self.seed, self.n_prime,
            self.p_actual, self.h, self.elapsed_ns, self.max_temp_hull,
            self.orientation_calls,
        ]


@dataclass(frozen=True)
class PowerFit:
    """Least-squares line on (ln x, ln y): y ~ coefficient * x**exponent."""

    exponent: float
    coefficient: float
    r2: float


class DegenerateFitError(ValueError):
    """Raised when a power-law fit has no x spread."""


class CostModel(Enum):
    """Operation-count predictors for the three builder families.

    ANCHORED_SCAN counts the pruning scan plus the anchored sub-segment
    search and deletion walks: n*(p+p0) + n'*h/p + (h-p)*h/p.
    ANCHORED_ARRAY adds the array insertion shifts: + (h-p)*h/2.
    BUCKET_SORT counts dispatch plus per-bucket sorting:
    2*n*p + p*((n/p)*log2(n/p)), log base 2.
    """

    ANCHORED_SCAN = "anchored-scan"
    ANCHORED_ARRAY = "anchored-array"
    BUCKET_SORT = "bucket-sort"


def predicted_operation_count(
    model: CostModel, n: int, p: int, p0: int, n_prime: int, h: int
) -> float:
    """Evaluate one cost model exactly as written; n == 0 costs nothing."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if min(n, p0, n_prime, h) < 0:
        raise ValueError("counts must be non-negative")
    if n == 0:
        return 0.0
    if model is CostModel.BUCKET_SORT:
        per = n / p
        return 2.0 * n * p + p * (per * math.log2(per)) if per > 0 else 2.0 * n * p
    total = n * (p + p0) + n_prime * h / p + (h - p) * h / p
    if model is CostModel.ANCHORED_ARRAY:
        total += (h - p) * h / 2.0
    return total


def fit_power_law(xs: Sequence[float], ys: Sequence[float]) -> PowerFit:
    """Slope/intercept of the log-log least-squares line through positive
    samples."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need at least two (x, y) samples of equal length")
    if any(x <= 0 for x in xs) or any(y <= 0 for y in ys):
        raise ValueError("power-law fit needs strictly positive values")
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx = sum(lx) / len(lx)
    my = sum(ly) / len(ly)
    sxx = sum((a - mx) ** 2 for a in lx)
    if sxx == 0.0:
        raise DegenerateFitError("all x values are equal")
    sxy = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_res = sum((b - (slope * a + intercept)) ** 2 for a, b in zip(lx, ly))
    ss_tot = sum((b - my) ** 2 for b in ly)
    r2 = 1.0 if ss_tot == 0.0 and ss_res == 0.0 else (1.0 - ss_res / ss_tot if ss_tot else 0.0)
    return PowerFit(exponent=slope, coefficient=math.exp(intercept), r2=r2)


def run_algorithm(
    algo: str,
    points: PointSet,
    mode: int = 8,
    at_opts: AtOptions | None = None,
    bucket_opts: BucketOptions | None = None,
) -> tuple[HullIndices, BuildStats]:
    """Run one named builder; returns (hull, stats).

    Baselines carry no box, so their n_prime reports as zero and
    max_temp_hull equals the hull size.
    """
    box_mode = BoxMode(mode)
    if algo == "at-basic":
        res = build_at_incremental(points, box_mode, AtOptions(False, False))
        return res.hull, res.stats
    if algo == "at-opt":
        res = build_at_incremental(points, box_mode, at_opts or AtOptions(True, True))
        return res.hull, res.stats
    if algo == "bucketed":
        res = build_bucketed(points, box_mode, bucket_opts or BucketOptions())
        return res.hull, res.stats
    if algo == "incremental":
        res = build_incremental(points)
        return res.hull, res.stats
    baseline: Callable[[PointSet], HullIndices] = {
        "graham": graham_scan,
        "jarvis": jarvis_march,
        "quickhull": quickhull,
        "chain": monotone_chain,
    }[algo]
    hull = baseline(points)
    return hull, BuildStats(0, len(hull), 0)


@dataclass(frozen=True)
class BenchConfig:
    algos: tuple[str, ...]
    dist: str
    n_list: tuple[int, ...]
    reps: int
    seed_base: int
    mode: int = 8
    verify: bool = False
    at_opts: AtOptions = AtOptions(True, True)
    bucket_opts: BucketOptions = field(default_factory=BucketOptions)


def run_bench(config: BenchConfig) -> list[BenchRecord]:
    """Execute every (algo, n, rep) cell in config order.

    Datasets are cached per (n, rep) so all algorithms see the identical
    PointSet.  With verify on, each hull is compared canonically against
    the monotone-chain oracle and a mismatch raises VerificationError.
    """
    for algo in config.algos:
        if algo not in ALGO_NAMES:
            raise ValueError(f"unknown algorithm {algo!r}")
    dist = Distribution(config.dist)
    datasets: dict[tuple[int, int], PointSet] = {}
    oracles: dict[tuple[int, int], HullIndices] = {}
    records: list[BenchRecord] = []
    p_cache: dict[tuple[int, int], int] = {}
    for algo in config.algos:
        uses_box = algo in BOX_ALGOS
        for n in config.n_list:
            for rep in range(config.reps):
                seed = config.seed_base + rep
                key = (n, rep)
                if key not in datasets:
                    datasets[key] = generate(dist, n, seed)
                points = datasets[key]
                t0 = time.perf_counter_ns()
                hull, stats = run_algorithm(
                    algo, points, config.mode, config.at_opts, config.bucket_opts
                )
                elapsed = time.perf_counter_ns() - t0
                p_actual = 0
                if uses_box:
                    if key not in p_cache:
                        p_cache[key] = find_extremes(points, BoxMode(config.mode)).p
                    p_actual = p_cache[key]
                if config.verify:
                    if key not in oracles:
                        oracles[key] = monotone_chain(points)
                    if hull != oracles[key]:
                        raise VerificationError(
                            f"{algo} disagrees with oracle on dist={config.dist} "
                            f"n={n} seed={seed}"
                        )
                records.append(
                    BenchRecord(
                        algo=algo,
                        mode=config.mode if uses_box else 0,
                        dist=dist.value,
                        n=n,
                        seed=seed,
                        n_prime=stats.n_prime_seen,
                        p_actual=p_actual,
                        h=len(hull),
                        elapsed_ns=elapsed,
                        max_temp_hull=stats.max_temp_hull,
                        orientation_calls=stats.orientation_calls,
                    )
                )
    return records


def write_csv(path: str | Path, records: Iterable[BenchRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER.split(","))
        for rec in records:
            writer.writerow(rec.csv_row())


def read_csv_rows(path: str | Path) -> list[dict[str, str]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def median_by_x(
    rows: Iterable[dict[str, str]], x_col: str, y_col: str
) -> tuple[list[float], list[float]]:
    """Collapse rows to (x, median y) pairs, x ascending."""
    groups: dict[float, list[float]] = {}
    for row in rows:
        groups.setdefault(float(row[x_col]), []).append(float(row[y_col]))
    xs = sorted(groups)
    return xs, [statistics.median(groups[x]) for x in xs]


@dataclass(frozen=True)
class VerifyInstance:
    n: int
    seed: int
    passed: bool
    h: int
    failed_algos: tuple[str, ...]


@dataclass(frozen=True)
class VerifyReport:
    dist: str
    instances: tuple[VerifyInstance, ...]

    @property
    def all_passed(self) -> bool:
        return all(inst.passed for inst in self.instances)


VERIFY_ALGOS = ("at-basic", "at-opt", "incremental", "bucketed", "graham", "jarvis", "quickhull")


def verify_equivalence(
    dist: str,
    n: int,
    reps: int,
    seed: int,
    dump_dir: str | Path = ".",
) -> VerifyReport:
    """Run every builder against the oracle on reps seeded instances.

    On a mismatch the offending point file and both canonical cycles are
    written under dump_dir for inspection.
    """
    distribution = Distribution(dist)
    instances: list[VerifyInstance] = []
    for rep in range(reps):
        inst_seed = seed + rep
        points = generate(distribution, n, inst_seed)
        oracle = monotone_chain(points)
        failed: list[str] = []
        for algo in VERIFY_ALGOS:
            hull, _ = run_algorithm(algo, points)
            if hull != oracle:
                failed.append(algo)
                _dump_mismatch(dump_dir, distribution.value, n, inst_seed, algo, points, oracle, hull)
        instances.append(
            VerifyInstance(
                n=n,
                seed=inst_seed,
                passed=not failed,
                h=len(oracle),
                failed_algos=tuple(failed),
            )
        )
    return VerifyReport(dist=distribution.value, instances=tuple(instances))


def _dump_mismatch(dump_dir, dist, n, seed, algo, points, oracle, hull) -> None:
    base = Path(dump_dir)
    base.mkdir(parents=True, exist_ok=True)
    stem = f"mismatch-{dist}-n{n}-s{seed}-{algo}"
    write_points(base / f"{stem}.points", points)
    with open(base / f"{stem}.cycles", "w", encoding="utf-8") as fh:
        fh.write("# oracle cycle\n")
        fh.write(" ".join(str(i) for i in oracle) + "\n")
        fh.write(f"# {algo} cycle\n")
        fh.write(" ".join(str(i) for i in hull) + "\n")
