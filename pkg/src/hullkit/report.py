"""Desk-scale experiment reports: CSV tables plus rendered figures.

Two reports reproduce the package's headline behaviours on synthetic
data: how many points survive each pruning box as n grows, and how the
builders' running times scale on easy (square) and adversarial (circle)
inputs.  Each report writes a CSV and a PNG side by side.
"""

from __future__ import annotations

import csv
import statistics
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .atbox import BoxMode, filter_interior, find_extremes
from .bench import BenchConfig, PowerFit, fit_power_law, run_bench, write_csv
from .datagen import Distribution, generate

_MODE_COLORS = {BoxMode.QUAD: "tab:red", BoxMode.HEX: "tab:blue", BoxMode.OCT: "black"}
_ALGO_COLORS = {
    "at-basic": "tab:red",
    "at-opt": "tab:orange",
    "incremental": "tab:green",
    "bucketed": "tab:blue",
    "graham": "tab:purple",
    "jarvis": "tab:brown",
    "quickhull": "tab:pink",
    "chain": "gray",
}


def pruning_report(
    out_dir: str | Path,
    n_values: tuple[int, ...] = (10**3, 10**4, 10**5),
    seeds: int = 5,
    seed_base: int = 1,
) -> dict[BoxMode, PowerFit]:
    """Survivor counts per box mode on square data, with fitted exponents.

    Writes pruning.csv (mode,n,seed,p_actual,n_prime) and pruning.png to
    out_dir; returns the per-mode power-law fit of n_prime against n.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows: list[tuple[int, int, int, int, int]] = []
    series: dict[BoxMode, tuple[list[float], list[float]]] = {
        m: ([], []) for m in BoxMode
    }
    for n in n_values:
        for rep in range(seeds):
            seed = seed_base + rep
            points = generate(Distribution.SQUARE, n, seed)
            for mode in BoxMode:
                box = find_extremes(points, mode)
                result = filter_interior(points, box)
                rows.append((int(mode), n, seed, box.p, result.n_prime))
                series[mode][0].append(float(n))
                series[mode][1].append(float(max(result.n_prime, 1)))

    with open(out / "pruning.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["mode", "n", "seed", "p_actual", "n_prime"])
        writer.writerows(rows)

    fits: dict[BoxMode, PowerFit] = {}
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for mode in BoxMode:
        xs, ys = series[mode]
        fit = fit_power_law(xs, ys)
        fits[mode] = fit
        label = f"{mode.name.lower()} (exponent {fit.exponent:.2f})"
        ax.loglog(xs, ys, ".", color=_MODE_COLORS[mode], alpha=0.5)
        grid = sorted(set(xs))
        ax.loglog(
            grid,
            [fit.coefficient * g**fit.exponent for g in grid],
            "-",
            color=_MODE_COLORS[mode],
            label=label,
        )
    ax.set_xlabel("input points n")
    ax.set_ylabel("points left after pruning")
    ax.set_title("Pruning-box survivors on uniform square data")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out / "pruning.png", dpi=150)
    plt.close(fig)
    return fits


def runtime_report(
    out_dir: str | Path,
    algos: tuple[str, ...] = ("at-basic", "at-opt", "incremental", "bucketed", "chain"),
    square_ns: tuple[int, ...] = (10**4, 3 * 10**4, 10**5),
    circle_ns: tuple[int, ...] = (2**10, 2**11, 2**12),
    reps: int = 3,
    seed_base: int = 1,
) -> dict[str, dict[str, PowerFit]]:
    """Median running times vs n on square and circle data.

    Writes runtime.csv (standard bench schema, both distributions
    appended) and runtime.png (two log-log panels) to out_dir; returns
    fitted time exponents per algorithm and panel.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    panels = {
        "square": run_bench(
            BenchConfig(algos=algos, dist="square", n_list=square_ns, reps=reps, seed_base=seed_base)
        ),
        "circle": run_bench(
            BenchConfig(algos=algos, dist="circle", n_list=circle_ns, reps=reps, seed_base=seed_base)
        ),
    }
    write_csv(out / "runtime.csv", panels["square"] + panels["circle"])

    fits: dict[str, dict[str, PowerFit]] = {"square": {}, "circle": {}}
    fig, axes = plt.subplots(1, 2, figsize=(11, 4.6))
    for ax, (panel, records) in zip(axes, panels.items()):
        for algo in algos:
            groups: dict[int, list[int]] = {}
            for rec in records:
                if rec.algo == algo:
                    groups.setdefault(rec.n, []).append(rec.elapsed_ns)
            xs = sorted(groups)
            ys = [statistics.median(groups[x]) / 1e6 for x in xs]
            fit = fit_power_law([float(x) for x in xs], ys)
            fits[panel][algo] = fit
            ax.loglog(
                xs, ys, "o-", color=_ALGO_COLORS[algo],
                label=f"{algo} (exponent {fit.exponent:.2f})",
            )
        ax.set_xlabel("input points n")
        ax.set_ylabel("median elapsed (ms)")
        ax.set_title(f"{panel} data")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out / "runtime.png", dpi=150)
    plt.close(fig)
    return fits
