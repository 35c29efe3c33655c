import csv

from hullkit.atbox import BoxMode
from hullkit.report import pruning_report, runtime_report


def test_pruning_report_files_and_fits(tmp_path):
    fits = pruning_report(tmp_path, n_values=(200, 800, 3200), seeds=3, seed_base=4)
    assert (tmp_path / "pruning.csv").exists()
    assert (tmp_path / "pruning.png").exists()
    assert set(fits) == set(BoxMode)
    # octagon prunes better than the quadrilateral at these sizes
    assert fits[BoxMode.OCT].exponent < fits[BoxMode.QUAD].exponent
    with open(tmp_path / "pruning.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 3 * 3 * 3
    assert set(rows[0]) == {"mode", "n", "seed", "p_actual", "n_prime"}


def test_runtime_report_files(tmp_path):
    fits = runtime_report(
        tmp_path,
        algos=("at-opt", "chain"),
        square_ns=(500, 2000),
        circle_ns=(128, 512),
        reps=2,
        seed_base=1,
    )
    assert (tmp_path / "runtime.csv").exists()
    assert (tmp_path / "runtime.png").exists()
    assert set(fits) == {"square", "circle"}
    assert set(fits["square"]) == {"at-opt", "chain"}
