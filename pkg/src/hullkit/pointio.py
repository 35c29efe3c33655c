"""Point and hull file formats.

Point files are UTF-8 text, one ``x y`` pair per line (decimal or
scientific notation, single space); lines starting with ``#`` are
comments.  Hull files hold one 0-based point index per line in canonical
CCW order.  Writers are deterministic: the same PointSet always produces
byte-identical output.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .geometry import PointSet
from .hulls import HullIndices


def write_points(path: str | Path, points: PointSet) -> None:
    xs = points.xs.tolist()
    ys = points.ys.tolist()
    with open(path, "w", encoding="utf-8") as fh:
        for x, y in zip(xs, ys):
            fh.write(f"{x!r} {y!r}\n")


def read_points(path: str | Path) -> PointSet:
    xs: list[float] = []
    ys: list[float] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'x y', got {line!r}")
            try:
                x = float(parts[0])
                y = float(parts[1])
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            xs.append(x)
            ys.append(y)
    try:
        return PointSet(np.array(xs, dtype=np.float64), np.array(ys, dtype=np.float64))
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def write_hull(path: str | Path, hull: HullIndices) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for i in hull:
            fh.write(f"{i}\n")


def read_hull(path: str | Path) -> list[int]:
    out: list[int] = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            out.append(int(line))
    return out
