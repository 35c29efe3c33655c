"""Shared helpers: independent property checkers and instance makers."""

from __future__ import annotations

import math
import random

import pytest

from hullkit import PointSet
from hullkit.hulls import HullIndices


def assert_strictly_convex(points: PointSet, hull: HullIndices) -> None:
    """Every cyclic triple turns strictly left (h >= 3), indices unique."""
    cyc = list(hull)
    assert len(set(cyc)) == len(cyc)
    if len(cyc) < 3:
        return
    xs, ys = points.xs, points.ys
    m = len(cyc)
    for k in range(m):
        a, b, c = cyc[k - 1], cyc[k], cyc[(k + 1) % m]
        v = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
        assert v > 0.0, f"triple ({a},{b},{c}) cross={v}"


def assert_contains_all(points: PointSet, hull: HullIndices) -> None:
    """No input point lies strictly outside the hull (brute force)."""
    cyc = list(hull)
    xs, ys = points.xs, points.ys
    if len(cyc) == 1:
        i = cyc[0]
        assert all(xs[j] == xs[i] and ys[j] == ys[i] for j in range(len(points)))
        return
    if len(cyc) == 2:
        a, b = cyc
        for j in range(len(points)):
            v = (xs[b] - xs[a]) * (ys[j] - ys[a]) - (ys[b] - ys[a]) * (xs[j] - xs[a])
            assert v == 0.0, f"point {j} off the degenerate hull line"
        return
    m = len(cyc)
    for j in range(len(points)):
        px, py = xs[j], ys[j]
        for k in range(m):
            a = cyc[k]
            b = cyc[(k + 1) % m]
            v = (xs[b] - xs[a]) * (py - ys[a]) - (ys[b] - ys[a]) * (px - xs[a])
            assert v >= 0.0, f"point {j} outside edge ({a},{b})"


def make_instance(rng: random.Random, kind: str, n: int) -> list[tuple[float, float]]:
    """Deterministic fuzz instances of assorted shapes."""
    if kind == "grid":
        return [(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(n)]
    if kind == "float":
        return [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
    if kind == "circle":
        return [
            (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
            for k in range(n)
        ]
    if kind == "collinear":
        return [(k * 0.25, k * 0.25) for k in (rng.randint(-8, 8) for _ in range(n))]
    raise ValueError(kind)


def inject_duplicates(rng: random.Random, pts: list[tuple[float, float]]) -> list[tuple[float, float]]:
    out = list(pts)
    for _ in range(rng.randint(1, max(1, len(pts) // 4))):
        out.append(rng.choice(pts))
    return out


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
