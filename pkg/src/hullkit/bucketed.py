"""Bucketed hull: pruning box dispatch plus per-side sort-based chains.

Outside points are dealt to one bucket per box side during the pruning
scan; each bucket's outer chain between its two corners is computed with
a sort-based hull and the chains are concatenated corner by corner.  The
dispatch can dynamically discard points inside the triangle of a side and
its current farthest point, quickhull-style.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .atbox import BoxMode, classify_sides, find_extremes
from .baselines import chain_cycle
from .geometry import EmptyInputError, Point, PointSet
from .hulls import BuildStats, HullResult, canonicalize, strictify


@dataclass(frozen=True)
class BucketOptions:
    """Dispatch refinements.

    triangle_filter: discard points inside the (corner, farthest, corner)
    triangle of their side, updating the farthest point on the fly.
    midpoint_split: order each bucket about the perpendicular through the
    side midpoint, right half first; the chain re-sorts, so this only
    changes presentation and exists for cost experiments.
    prealloc_hint: advisory expected bucket size ceil(2*sqrt(N)/p); Python
    lists manage capacity themselves, so the hint is recorded but inert.
    """

    triangle_filter: bool = True
    midpoint_split: bool = True
    prealloc_hint: bool = True


@dataclass
class SideBucket:
    """Points dealt to one box side, with the farthest point seen so far."""

    side: int
    members: list[int] = field(default_factory=list)
    far_point: tuple[int, float] | None = None


def triangle_filter_admit(
    points: PointSet,
    bucket: SideBucket,
    index: int,
    corners: tuple[Point, Point],
) -> bool:
    """Admit or discard one outside point against the side's triangle.

    The first point of a side always becomes the farthest point.  Later
    points strictly inside the triangle (corner_lo, farthest, corner_hi)
    are discarded; admitted points replace the farthest when their |cross|
    against the side exceeds the stored one.  Works for either winding of
    the triangle.  Returns True to admit; does not append to members.
    """
    lo, hi = corners
    qx = float(points.xs[index])
    qy = float(points.ys[index])
    mag = abs((hi.x - lo.x) * (qy - lo.y) - (hi.y - lo.y) * (qx - lo.x))
    if bucket.far_point is None:
        bucket.far_point = (index, mag)
        return True
    far_idx, far_mag = bucket.far_point
    fx = float(points.xs[far_idx])
    fy = float(points.ys[far_idx])
    d1 = (fx - lo.x) * (qy - lo.y) - (fy - lo.y) * (qx - lo.x)
    d2 = (hi.x - fx) * (qy - fy) - (hi.y - fy) * (qx - fx)
    d3 = (lo.x - hi.x) * (qy - hi.y) - (lo.y - hi.y) * (qx - hi.x)
    if (d1 > 0.0 and d2 > 0.0 and d3 > 0.0) or (d1 < 0.0 and d2 < 0.0 and d3 < 0.0):
        return False
    if mag > far_mag:
        bucket.far_point = (index, mag)
    return True


def bucket_chain(
    points: PointSet,
    members: list[int],
    corner_lo: int,
    corner_hi: int,
) -> list[int]:
    """Outer chain of a bucket: the CCW hull path from corner_lo to
    corner_hi over members strictly right of the side, corners excluded."""
    chain, _ = _bucket_chain_counted(points, members, corner_lo, corner_hi)
    return chain


def _bucket_chain_counted(
    points: PointSet,
    members: list[int],
    corner_lo: int,
    corner_hi: int,
) -> tuple[list[int], int]:
    if not members:
        return [], 0
    xs, ys = points.xs, points.ys
    pool = members + [corner_lo, corner_hi]
    pool.sort(key=lambda i: (xs[i], ys[i], i))
    uniq: list[int] = []
    for i in pool:
        if uniq and xs[uniq[-1]] == xs[i] and ys[uniq[-1]] == ys[i]:
            continue
        uniq.append(i)
    cycle, calls = chain_cycle(points, uniq)
    if len(cycle) == 2:
        return [], calls
    start = cycle.index(corner_lo)
    rot = cycle[start:] + cycle[:start]
    end = rot.index(corner_hi)
    if end != len(rot) - 1:
        raise RuntimeError("bucket members were not all right of the side")
    return rot[1:end], calls


def build_bucketed(
    points: PointSet,
    mode: BoxMode = BoxMode.OCT,
    opts: BucketOptions = BucketOptions(),
) -> HullResult:
    """Strict convex hull via box pruning into side buckets.

    The dispatch scan is sequential in input order when the triangle
    filter is on (its farthest-point state is order-sensitive); bucket
    chains are independent of each other.  Degenerate boxes behave as in
    the anchored builder.
    """
    n = len(points)
    if n == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    box = find_extremes(points, mode)
    labels, class_calls = classify_sides(points, box)
    if box.p == 1:
        hull = canonicalize(points, [box.corners[0]])
        return HullResult(hull, BuildStats(0, 1, class_calls))

    p = box.p
    xs, ys = points.xs, points.ys
    outside = np.nonzero(labels >= 0)[0]
    n_prime = int(outside.size)
    calls = class_calls
    # prealloc_hint would reserve ceil(2*sqrt(n)/p) slots per bucket; list
    # growth is amortised in Python so the hint has no observable effect.

    buckets: list[SideBucket] = []
    for j in range(p):
        mine = outside[labels[outside] == j]
        bucket = SideBucket(side=j)
        if opts.triangle_filter and mine.size:
            lo = points[box.corners[j]]
            hi = points[box.corners[(j + 1) % p]]
            corner_pair = (lo, hi)
            for idx in mine.tolist():
                if bucket.far_point is None:
                    calls += 1  # |cross| for the first farthest point
                else:
                    calls += 4  # |cross| plus the three triangle tests
                if triangle_filter_admit(points, bucket, idx, corner_pair):
                    bucket.members.append(idx)
        else:
            bucket.members = mine.tolist()
        buckets.append(bucket)

    if opts.midpoint_split:
        for j, bucket in enumerate(buckets):
            if len(bucket.members) < 2:
                continue
            lo_i = box.corners[j]
            hi_i = box.corners[(j + 1) % p]
            mx = (xs[lo_i] + xs[hi_i]) / 2.0
            my = (ys[lo_i] + ys[hi_i]) / 2.0
            dx = xs[hi_i] - xs[lo_i]
            dy = ys[hi_i] - ys[lo_i]
            right = [i for i in bucket.members if (xs[i] - mx) * dx + (ys[i] - my) * dy > 0.0]
            left = [i for i in bucket.members if (xs[i] - mx) * dx + (ys[i] - my) * dy <= 0.0]
            bucket.members = right + left

    cycle: list[int] = []
    working = p
    for j in range(p):
        working += len(buckets[j].members)
        chain, chain_calls = _bucket_chain_counted(
            points, buckets[j].members, box.corners[j], box.corners[(j + 1) % p]
        )
        calls += chain_calls
        cycle.append(box.corners[j])
        cycle.extend(chain)

    final = canonicalize(points, strictify(points, cycle))
    return HullResult(
        final,
        BuildStats(
            n_prime_seen=n_prime,
            max_temp_hull=max(working, len(final)),
            orientation_calls=calls,
        ),
    )
