"""Reference hull builders: monotone chain (the oracle), Graham scan,
Jarvis march and quickhull.

All four emit strict hulls (no collinear boundary vertices) so canonical
cycles from different algorithms compare exactly.  Duplicate coordinates
are resolved to the lowest input index before any algorithm runs, which
keeps index-level output identical across builders.
"""

from __future__ import annotations

from functools import cmp_to_key

import numpy as np

from .geometry import EmptyInputError, PointSet
from .hulls import HullIndices, canonicalize


def dedup_lowest_index(points: PointSet) -> list[int]:
    """Indices sorted by (x, y), one per distinct coordinate, lowest index
    winning among duplicates."""
    n = len(points)
    xs, ys = points.xs, points.ys
    order = np.lexsort((ys, xs))  # stable: equal coords stay in index order
    sx = xs[order]
    sy = ys[order]
    keep = np.ones(n, dtype=bool)
    if n > 1:
        keep[1:] = (sx[1:] != sx[:-1]) | (sy[1:] != sy[:-1])
    return order[keep].tolist()


def chain_cycle(points: PointSet, sorted_unique: list[int]) -> tuple[list[int], int]:
    """CCW strict-hull cycle of pre-sorted, coordinate-unique indices.

    Returns (cycle, predicate_calls).  Lower and upper chains are built
    with strict left turns and concatenated; the cycle starts at the
    lexicographically smallest vertex by construction.
    """
    xs = points.xs
    ys = points.ys
    seq = sorted_unique
    if len(seq) == 1:
        return [seq[0]], 0
    calls = 0
    lower: list[int] = []
    for i in seq:
        x, y = xs[i], ys[i]
        while len(lower) >= 2:
            a, b = lower[-2], lower[-1]
            calls += 1
            if (xs[b] - xs[a]) * (y - ys[a]) - (ys[b] - ys[a]) * (x - xs[a]) <= 0.0:
                lower.pop()
            else:
                break
        lower.append(i)
    upper: list[int] = []
    for i in reversed(seq):
        x, y = xs[i], ys[i]
        while len(upper) >= 2:
            a, b = upper[-2], upper[-1]
            calls += 1
            if (xs[b] - xs[a]) * (y - ys[a]) - (ys[b] - ys[a]) * (x - xs[a]) <= 0.0:
                upper.pop()
            else:
                break
        upper.append(i)
    return lower[:-1] + upper[:-1], calls


def monotone_chain(points: PointSet) -> HullIndices:
    """Andrew-style sort-based hull; the correctness oracle for everything
    else in this package."""
    if len(points) == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    cycle, _ = chain_cycle(points, dedup_lowest_index(points))
    return canonicalize(points, cycle)


def graham_scan(points: PointSet) -> HullIndices:
    """Polar-angle sort around the lowest point, strict-turn stack scan.

    Angle ties are ordered nearer-first; the comparator uses exact cross
    products instead of atan2 so collinear rays compare equal.
    """
    if len(points) == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    cand = dedup_lowest_index(points)
    xs, ys = points.xs, points.ys
    pivot = min(cand, key=lambda i: (ys[i], xs[i]))
    rest = [i for i in cand if i != pivot]
    if not rest:
        return canonicalize(points, [pivot])
    px, py = xs[pivot], ys[pivot]

    def by_angle(a: int, b: int) -> int:
        v = (xs[a] - px) * (ys[b] - py) - (ys[a] - py) * (xs[b] - px)
        if v > 0.0:
            return -1
        if v < 0.0:
            return 1
        da = (xs[a] - px) ** 2 + (ys[a] - py) ** 2
        db = (xs[b] - px) ** 2 + (ys[b] - py) ** 2
        return -1 if da < db else (1 if da > db else 0)

    rest.sort(key=cmp_to_key(by_angle))
    stack = [pivot]
    for i in rest:
        x, y = xs[i], ys[i]
        while len(stack) >= 2:
            a, b = stack[-2], stack[-1]
            if (xs[b] - xs[a]) * (y - ys[a]) - (ys[b] - ys[a]) * (x - xs[a]) <= 0.0:
                stack.pop()
            else:
                break
        stack.append(i)
    return canonicalize(points, stack)


def jarvis_march(points: PointSet) -> HullIndices:
    """Gift wrapping from the lowest point, most-clockwise successor each
    step; collinear candidates lose to the farther one (strict hull)."""
    if len(points) == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    cand = dedup_lowest_index(points)
    xs, ys = points.xs, points.ys
    if len(cand) == 1:
        return canonicalize(points, cand)
    start = min(cand, key=lambda i: (ys[i], xs[i]))
    cycle = []
    cur = start
    for _ in range(len(cand) + 1):
        cycle.append(cur)
        cx, cy = xs[cur], ys[cur]
        nxt = cand[0] if cand[0] != cur else cand[1]
        nd = (xs[nxt] - cx) ** 2 + (ys[nxt] - cy) ** 2
        for i in cand:
            if i == cur or i == nxt:
                continue
            v = (xs[nxt] - cx) * (ys[i] - cy) - (ys[nxt] - cy) * (xs[i] - cx)
            if v < 0.0:
                nxt = i
                nd = (xs[i] - cx) ** 2 + (ys[i] - cy) ** 2
            elif v == 0.0:
                d = (xs[i] - cx) ** 2 + (ys[i] - cy) ** 2
                if d > nd:
                    nxt = i
                    nd = d
        if nxt == start:
            break
        cur = nxt
    else:
        raise RuntimeError("gift wrapping failed to close the hull")
    return canonicalize(points, cycle)


def quickhull(points: PointSet) -> HullIndices:
    """Recursive farthest-point splitting on the min/max-x chord.

    Farthest-point ties break to the lowest index; strictly collinear
    points never recurse, so the output is a strict hull.  The recursion
    is run on an explicit stack to stay safe on adversarial inputs.
    """
    if len(points) == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    cand = dedup_lowest_index(points)
    xs, ys = points.xs, points.ys
    if len(cand) == 1:
        return canonicalize(points, cand)
    a = cand[0]  # lexicographic min
    b = cand[-1]  # lexicographic max

    def rights(p: int, q: int, among: list[int]) -> list[int]:
        px, py = xs[p], ys[p]
        dx, dy = xs[q] - px, ys[q] - py
        return [i for i in among if dx * (ys[i] - py) - dy * (xs[i] - px) < 0.0]

    out: list[int] = [a]
    # LIFO stack, in-order expansion: seg(P,Q,S) -> seg(P,F,S1), emit F, seg(F,Q,S2)
    work: list[tuple] = [
        ("seg", b, a, rights(b, a, cand)),
        ("emit", b),
        ("seg", a, b, rights(a, b, cand)),
    ]
    while work:
        item = work.pop()
        if item[0] == "emit":
            out.append(item[1])
            continue
        _, p, q, s = item
        if not s:
            continue
        px, py = xs[p], ys[p]
        dx, dy = xs[q] - px, ys[q] - py
        far = s[0]
        best = dx * (ys[far] - py) - dy * (xs[far] - px)
        for i in s[1:]:
            v = dx * (ys[i] - py) - dy * (xs[i] - px)
            if v < best:  # most negative = farthest on the right side
                best = v
                far = i
        work.append(("seg", far, q, rights(far, q, s)))
        work.append(("emit", far))
        work.append(("seg", p, far, rights(p, far, s)))
    return canonicalize(points, out)
