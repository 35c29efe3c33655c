"""Plain incremental hull: seed a triangle, then insert point by point.

No pruning and no pre-sorting: each point is tested against the whole
current hull, and the concave-deletion walks after an insertion may travel
anywhere on the cycle (nothing is anchored).  The size of the temporary
hull is tracked because it can temporarily exceed the final hull.
"""

from __future__ import annotations

from .geometry import EmptyInputError, PointSet
from .hulls import BuildStats, HullResult, canonicalize


class AllCollinear(Exception):
    """Every point lies on one line; carries the extreme endpoint indices.

    endpoints is (lo, hi) by lexicographic (x, y) order, equal when all
    points coincide.
    """

    def __init__(self, endpoints: tuple[int, int]):
        super().__init__(f"all points collinear, endpoints {endpoints}")
        self.endpoints = endpoints


def seed_triangle(points: PointSet) -> tuple[list[int], int]:
    """First three non-aligned points, oriented CCW, plus the scan position
    after them.

    Scans from the front for the first point distinct from point 0, then
    for the first point not collinear with those two; the triple is swapped
    to turn left if needed.  Raises AllCollinear (with the lexicographic
    extreme endpoints) when no such triple exists.
    """
    n = len(points)
    if n == 0:
        raise EmptyInputError("cannot seed a hull from an empty point set")
    xs = points.xs.tolist()
    ys = points.ys.tolist()
    x0, y0 = xs[0], ys[0]
    j = -1
    for t in range(1, n):
        if xs[t] != x0 or ys[t] != y0:
            j = t
            break
    if j < 0:
        raise AllCollinear((0, 0))
    xj, yj = xs[j], ys[j]
    for k in range(j + 1, n):
        v = (xj - x0) * (ys[k] - y0) - (yj - y0) * (xs[k] - x0)
        if v > 0.0:
            return [0, j, k], k + 1
        if v < 0.0:
            return [0, k, j], k + 1
    lo = min(range(n), key=lambda i: (xs[i], ys[i], i))
    hi = max(range(n), key=lambda i: (xs[i], ys[i], -i))
    raise AllCollinear((lo, hi))


def build_incremental(points: PointSet) -> HullResult:
    """Incremental hull of all points, with temporary-hull-size tracking.

    Each non-seed point is scanned against the closed current hull; when
    it is strictly right of some edge, vertices made concave (or collinear)
    by it are deleted walking both ways around the full cycle, the walk
    never eating below two survivors, and the point is inserted.
    n_prime_seen counts the points found outside the temporary hull.
    """
    n = len(points)
    if n == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    calls = 0
    try:
        hull, _ = seed_triangle(points)
    except AllCollinear as degenerate:
        lo, hi = degenerate.endpoints
        cycle = [lo] if lo == hi else [lo, hi]
        final = canonicalize(points, cycle)
        return HullResult(final, BuildStats(0, len(final), 0))

    xs = points.xs.tolist()
    ys = points.ys.tolist()
    seeds = set(hull)
    max_temp = 3
    inserted = 0

    for i in range(n):
        if i in seeds:
            continue
        qx, qy = xs[i], ys[i]
        m = len(hull)
        entry = -1
        for e in range(m):
            a = hull[e]
            b = hull[e + 1] if e + 1 < m else hull[0]
            ax, ay = xs[a], ys[a]
            calls += 1
            if (xs[b] - ax) * (qy - ay) - (ys[b] - ay) * (qx - ax) < 0.0:
                entry = e
                break
        if entry < 0:
            continue

        inserted += 1
        deleted = 0
        b_pos = entry
        while deleted < m - 2:
            a = hull[b_pos - 1]
            b = hull[b_pos]
            ax, ay = xs[a], ys[a]
            calls += 1
            if (xs[b] - ax) * (qy - ay) - (ys[b] - ay) * (qx - ax) <= 0.0:
                b_pos -= 1
                deleted += 1
            else:
                break
        f_pos = entry + 1
        while deleted < m - 2:
            v = hull[f_pos % m]
            w = hull[(f_pos + 1) % m]
            vx, vy = xs[v], ys[v]
            calls += 1
            if (vx - qx) * (ys[w] - qy) - (vy - qy) * (xs[w] - qx) <= 0.0:
                f_pos += 1
                deleted += 1
            else:
                break
        kept = m - deleted
        hull = [hull[(f_pos + t) % m] for t in range(kept)] + [i]
        if len(hull) > max_temp:
            max_temp = len(hull)

    final = canonicalize(points, hull)
    return HullResult(
        final,
        BuildStats(
            n_prime_seen=inserted,
            max_temp_hull=max(max_temp, len(final)),
            orientation_calls=calls,
        ),
    )
