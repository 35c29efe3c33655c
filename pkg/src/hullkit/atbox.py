"""Extreme-point pruning box (Akl-Toussaint style) and interior filtering.

The box is a convex polygon spanned by points that maximise a fixed set of
directional objectives: the coordinate extremes for a quadrilateral, plus
coordinate-sum extremes for a hexagon, plus coordinate-difference extremes
for an octagon.  Points inside the box cannot be hull vertices and are
discarded; points outside are tagged with the first box side they violate,
which later builders use to localise their work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .geometry import EmptyInputError, PointSet

INSIDE = -2  # classification sentinel: point is inside or on the box
CORNER = -1  # classification sentinel: point is a box corner, never tested


class BoxMode(IntEnum):
    """Requested number of box corners."""

    QUAD = 4
    HEX = 6
    OCT = 8


@dataclass(frozen=True)
class BoxSpec:
    """The pruning polygon: corner indices in CCW order, after collapse.

    p can be smaller than the requested corner count because one point
    frequently wins several objectives at once; the cycle is strictly
    convex whenever p >= 3.
    """

    mode: BoxMode
    corners: tuple[int, ...]
    p: int


@dataclass(frozen=True)
class FilterResult:
    """Points surviving the box filter, with the side each one violates."""

    indices: np.ndarray
    sides: np.ndarray
    n_prime: int

    @property
    def kept(self) -> list[tuple[int, int]]:
        return list(zip(self.indices.tolist(), self.sides.tolist()))


def extreme_objectives(points: PointSet, mode: BoxMode) -> list[int]:
    """Indices winning each directional objective, in CCW objective order.

    Ties are broken by lowest input index (argmin/argmax return the first
    occurrence).  Objective order per mode, as compass directions:
    quad S,E,N,W; hex S,E,NE,N,W,SW; oct S,SE,E,NE,N,NW,W,SW.
    """
    if len(points) == 0:
        raise EmptyInputError("cannot take extremes of an empty point set")
    xs, ys = points.xs, points.ys
    s = xs + ys
    d = xs - ys
    min_y = int(np.argmin(ys))
    max_x = int(np.argmax(xs))
    max_y = int(np.argmax(ys))
    min_x = int(np.argmin(xs))
    if mode == BoxMode.QUAD:
        return [min_y, max_x, max_y, min_x]
    max_s = int(np.argmax(s))
    min_s = int(np.argmin(s))
    if mode == BoxMode.HEX:
        return [min_y, max_x, max_s, max_y, min_x, min_s]
    max_d = int(np.argmax(d))
    min_d = int(np.argmin(d))
    return [min_y, max_d, max_x, max_s, max_y, min_d, min_x, min_s]


def _dedup_cyclic(seq: list[int]) -> list[int]:
    out: list[int] = []
    for i in seq:
        if not out or out[-1] != i:
            out.append(i)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def find_extremes(points: PointSet, mode: BoxMode) -> BoxSpec:
    """Build the pruning box for the given mode.

    After the objective sweep, cyclically-consecutive duplicate indices are
    merged; if the surviving corners are all collinear the box degenerates
    to the two lexicographic endpoints (or a single point); otherwise
    corners that fail a strict left turn are removed one at a time until
    the cycle is strictly convex.
    """
    corners = _dedup_cyclic(extreme_objectives(points, mode))
    xs, ys = points.xs, points.ys

    if len(corners) >= 2:
        a = corners[0]
        collinear = True
        for b in corners[1:]:
            if xs[a] != xs[b] or ys[a] != ys[b]:
                break
        else:
            b = a
        for c in corners:
            v = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
            if v != 0.0:
                collinear = False
                break
        if collinear:
            lo = min(corners, key=lambda i: (xs[i], ys[i], i))
            hi = max(corners, key=lambda i: (xs[i], ys[i], -i))
            corners = [lo] if lo == hi else [lo, hi]

    changed = True
    while changed and len(corners) >= 3:
        changed = False
        m = len(corners)
        for k in range(m):
            a, b, c = corners[k - 1], corners[k], corners[(k + 1) % m]
            v = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
            if v <= 0.0:
                del corners[k]
                changed = True
                break

    return BoxSpec(mode=mode, corners=tuple(corners), p=len(corners))


def classify_sides(points: PointSet, box: BoxSpec) -> tuple[np.ndarray, int]:
    """First box side each point is strictly right of, vectorised.

    Returns (labels, calls) where labels[i] is the side index for points
    outside the box, INSIDE for points left of or on every side, and
    CORNER for the box corners themselves (which are never tested).
    ``calls`` is the number of orientation predicates the equivalent
    sequential scan performs: sides are tried in order and the scan stops
    at the first right side, so an outside point costs side+1 tests and an
    inside point costs p.
    """
    n = len(points)
    p = box.p
    labels = np.full(n, INSIDE, dtype=np.int64)
    if p >= 2:
        xs, ys = points.xs, points.ys
        cx = xs[list(box.corners)]
        cy = ys[list(box.corners)]
        for j in range(p - 1, -1, -1):
            ax, ay = cx[j], cy[j]
            bx, by = cx[(j + 1) % p], cy[(j + 1) % p]
            right = (bx - ax) * (ys - ay) - (by - ay) * (xs - ax) < 0.0
            labels[right] = j
    corner_arr = np.fromiter(box.corners, dtype=np.int64, count=p)
    labels[corner_arr] = CORNER
    calls = 0
    if p >= 2:
        non_corner = n - p
        outside = labels >= 0
        calls = int(labels[outside].sum() + int(outside.sum()))
        calls += p * (non_corner - int(outside.sum()))
    return labels, calls


def filter_interior(points: PointSet, box: BoxSpec) -> FilterResult:
    """Drop every point inside the box; keep (index, violated side) pairs.

    Corners are excluded from the scan: they are hull points by
    construction.  Kept points come back in input-index order.
    """
    labels, _ = classify_sides(points, box)
    keep = labels >= 0
    indices = np.nonzero(keep)[0].astype(np.int64)
    sides = labels[keep]
    return FilterResult(indices=indices, sides=sides, n_prime=int(indices.size))
