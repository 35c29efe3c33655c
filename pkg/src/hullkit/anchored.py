"""Anchored incremental hull: build the hull during the pruning scan.

Each point classified outside the box is already tagged with the box side
it violates.  The evolving hull keeps the positions of the box corners
(anchors), so locating the violated hull edge, and the concave-deletion
walks around an insertion, never leave the one side's anchor range.  The
box corners are hull vertices by construction and are never deleted.

Two optional refinements: a binary search for the violated sub-segment
inside a side's range, and per-side vertex buffers that confine array
shifts to one side's sequence.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .atbox import BoxMode, classify_sides, find_extremes
from .geometry import EmptyInputError, Point, PointSet
from .hulls import BuildStats, HullResult, canonicalize, strictify


class BadSideError(ValueError):
    """Raised for a side index outside [0, p)."""


class SearchStrategy(Enum):
    LINEAR = "linear"
    DICHOTOMY = "dichotomy"


@dataclass(frozen=True)
class AtOptions:
    """Refinement switches: sub-segment binary search and per-side buffers."""

    dichotomy: bool = False
    side_buffers: bool = False


class AnchoredHull:
    """Working hull: CCW vertex indices plus box-corner anchor positions.

    vertices[anchors[j]] is box corner j; anchors are strictly increasing
    with anchors[0] == 0.  Side j owns the edge positions from anchors[j]
    up to (but not including) anchors[j+1], the last side wrapping back to
    vertex 0.  Coordinates of hull vertices are cached as Python floats
    because the edge scans dominate the running time.
    """

    __slots__ = ("points", "vertices", "anchors", "_cx", "_cy", "orientation_calls")

    def __init__(self, points: PointSet, corners: tuple[int, ...]):
        self.points = points
        self.vertices: list[int] = list(corners)
        self.anchors: list[int] = list(range(len(corners)))
        xs, ys = points.xs, points.ys
        self._cx: dict[int, float] = {i: float(xs[i]) for i in corners}
        self._cy: dict[int, float] = {i: float(ys[i]) for i in corners}
        self.orientation_calls = 0

    def side_range(self, side: int) -> tuple[int, int]:
        """Edge positions [lo, hi) owned by a side; hi == len(vertices) for
        the last side, whose final edge wraps to vertex 0."""
        p = len(self.anchors)
        if not 0 <= side < p:
            raise BadSideError(f"side {side} out of range for p={p}")
        lo = self.anchors[side]
        hi = self.anchors[side + 1] if side + 1 < p else len(self.vertices)
        return lo, hi

    def _cache(self, index: int) -> None:
        self._cx[index] = float(self.points.xs[index])
        self._cy[index] = float(self.points.ys[index])


def locate_insertion(
    hull: AnchoredHull,
    side: int,
    q: Point,
    strategy: SearchStrategy = SearchStrategy.LINEAR,
) -> int | None:
    """Find an edge position in the side's range that q is strictly right
    of; None when q is left of or on every sub-segment (q is outside the
    box but inside the temporary hull).

    The linear strategy scans in order and stops at the first violated
    edge.  The dichotomy strategy binary-searches the vertex fan around
    the side's first corner and tests the one edge spanning q's wedge; it
    may pick a different edge than the linear scan when q is right of
    several, which the deletion walks in splice_vertex absorb.
    """
    lo, hi = hull.side_range(side)
    verts = hull.vertices
    cx, cy = hull._cx, hull._cy
    m = len(verts)
    qx, qy = q.x, q.y
    calls = 0

    if strategy is SearchStrategy.LINEAR or hi - lo == 1:
        for s in range(lo, hi):
            ai = verts[s]
            bi = verts[s + 1] if s + 1 < m else verts[0]
            ax, ay = cx[ai], cy[ai]
            calls += 1
            if (cx[bi] - ax) * (qy - ay) - (cy[bi] - ay) * (qx - ax) < 0.0:
                hull.orientation_calls += calls
                return s
        hull.orientation_calls += calls
        return None

    # Fan search: rays from w0 to the side's interior vertices are sorted
    # CCW, and "q left of ray i" is true on a prefix of i.  The wedge edge
    # is the only candidate that q can be strictly right of.
    k = hi - lo
    w0 = verts[lo]
    w0x, w0y = cx[w0], cy[w0]

    def ray(i: int) -> float:
        vi = verts[lo + i]
        return (cx[vi] - w0x) * (qy - w0y) - (cy[vi] - w0y) * (qx - w0x)

    calls += 1
    if ray(1) < 0.0:
        cand = lo
    else:
        a, b = 1, k - 1
        while a < b:
            mid = (a + b + 1) // 2
            calls += 1
            if ray(mid) >= 0.0:
                a = mid
            else:
                b = mid - 1
        cand = lo + a
    ai = verts[cand]
    bi = verts[cand + 1] if cand + 1 < m else verts[0]
    ax, ay = cx[ai], cy[ai]
    calls += 1
    hull.orientation_calls += calls
    if (cx[bi] - ax) * (qy - ay) - (cy[bi] - ay) * (qx - ax) < 0.0:
        return cand
    return None


def splice_vertex(hull: AnchoredHull, at: int, new_index: int) -> AnchoredHull:
    """Insert a vertex at edge position ``at`` (the new point must be
    strictly right of that edge), deleting concave neighbours.

    Walks backward from the edge start and forward from its end, removing
    vertices that would no longer make a strict left turn, but never past
    the side's anchors.  Anchor positions after the splice shift by the
    net length change.  Mutates and returns ``hull``.
    """
    verts = hull.vertices
    anchors = hull.anchors
    p = len(anchors)
    m = len(verts)
    side = bisect_right(anchors, at) - 1
    lo = anchors[side]
    hi = anchors[side + 1] if side + 1 < p else m
    hull._cache(new_index)
    cx, cy = hull._cx, hull._cy
    qx, qy = cx[new_index], cy[new_index]
    calls = 0

    b = at
    while b > lo:
        ai = verts[b - 1]
        bi = verts[b]
        ax, ay = cx[ai], cy[ai]
        calls += 1
        if (cx[bi] - ax) * (qy - ay) - (cy[bi] - ay) * (qx - ax) <= 0.0:
            b -= 1
        else:
            break
    f = at + 1
    while f < hi:
        vi = verts[f]
        wi = verts[f + 1] if f + 1 < m else verts[0]
        vx, vy = cx[vi], cy[vi]
        calls += 1
        if (vx - qx) * (cy[wi] - qy) - (vy - qy) * (cx[wi] - qx) <= 0.0:
            f += 1
        else:
            break

    verts[b + 1 : f] = [new_index]
    delta = b + 2 - f
    if delta:
        for t in range(side + 1, p):
            anchors[t] += delta
    hull.orientation_calls += calls
    return hull


def build_at_incremental(
    points: PointSet,
    mode: BoxMode = BoxMode.OCT,
    opts: AtOptions = AtOptions(),
) -> HullResult:
    """Strict convex hull of all points, built during the pruning scan.

    Computes the box, classifies every non-corner point against it, and
    splices each outside point into the anchored hull for its violated
    side.  With side_buffers the hull is held as one chain per box side
    and concatenated at the end.  Degenerate boxes (p <= 2) keep working:
    a two-corner box is a closed two-sided cycle, so off-line points are
    still classified outside and inserted, and genuinely collinear input
    yields the two extreme endpoints (one vertex if all points coincide).
    """
    n = len(points)
    if n == 0:
        raise EmptyInputError("cannot take the hull of an empty point set")
    box = find_extremes(points, mode)
    labels, class_calls = classify_sides(points, box)
    if box.p == 1:
        hull = canonicalize(points, [box.corners[0]])
        return HullResult(hull, BuildStats(0, 1, class_calls))

    outside = np.nonzero(labels >= 0)[0]
    n_prime = int(outside.size)
    sides_arr = labels[outside].tolist()
    idx_list = outside.tolist()
    ox = points.xs[outside].tolist()
    oy = points.ys[outside].tolist()

    if opts.side_buffers:
        cycle, max_temp, calls = _build_side_buffered(
            points, box.corners, idx_list, sides_arr, ox, oy, opts.dichotomy
        )
    else:
        hull_state = AnchoredHull(points, box.corners)
        strategy = SearchStrategy.DICHOTOMY if opts.dichotomy else SearchStrategy.LINEAR
        max_temp = len(hull_state.vertices)
        for i, idx in enumerate(idx_list):
            pos = locate_insertion(hull_state, sides_arr[i], Point(ox[i], oy[i]), strategy)
            if pos is not None:
                splice_vertex(hull_state, pos, idx)
                if len(hull_state.vertices) > max_temp:
                    max_temp = len(hull_state.vertices)
        cycle = hull_state.vertices
        calls = hull_state.orientation_calls

    final = canonicalize(points, strictify(points, list(cycle)))
    return HullResult(
        final,
        BuildStats(
            n_prime_seen=n_prime,
            max_temp_hull=max(max_temp, len(final)),
            orientation_calls=class_calls + calls,
        ),
    )


def _build_side_buffered(
    points: PointSet,
    corners: tuple[int, ...],
    idx_list: list[int],
    sides_arr: list[int],
    ox: list[float],
    oy: list[float],
    dichotomy: bool,
) -> tuple[list[int], int, int]:
    """Per-side chain variant: chains[j] runs from corner j to corner j+1
    inclusive, so locate and splice touch one short list instead of the
    whole hull.  Returns (cycle, max_temp_hull, orientation_calls)."""
    p = len(corners)
    xs, ys = points.xs, points.ys
    cx = {i: float(xs[i]) for i in corners}
    cy = {i: float(ys[i]) for i in corners}
    chains: list[list[int]] = [
        [corners[j], corners[(j + 1) % p]] for j in range(p)
    ]
    calls = 0
    size = p
    max_temp = p

    for t, idx in enumerate(idx_list):
        chain = chains[sides_arr[t]]
        qx = ox[t]
        qy = oy[t]
        k = len(chain) - 1  # edge count

        if not dichotomy or k == 1:
            pos = None
            for s in range(k):
                ai = chain[s]
                bi = chain[s + 1]
                ax, ay = cx[ai], cy[ai]
                calls += 1
                if (cx[bi] - ax) * (qy - ay) - (cy[bi] - ay) * (qx - ax) < 0.0:
                    pos = s
                    break
        else:
            w0x, w0y = cx[chain[0]], cy[chain[0]]

            def ray(i: int) -> float:
                vi = chain[i]
                return (cx[vi] - w0x) * (qy - w0y) - (cy[vi] - w0y) * (qx - w0x)

            calls += 1
            if ray(1) < 0.0:
                cand = 0
            else:
                a, b2 = 1, k - 1
                while a < b2:
                    mid = (a + b2 + 1) // 2
                    calls += 1
                    if ray(mid) >= 0.0:
                        a = mid
                    else:
                        b2 = mid - 1
                cand = a
            ai = chain[cand]
            bi = chain[cand + 1]
            ax, ay = cx[ai], cy[ai]
            calls += 1
            pos = None
            if (cx[bi] - ax) * (qy - ay) - (cy[bi] - ay) * (qx - ax) < 0.0:
                pos = cand

        if pos is None:
            continue

        cx[idx] = qx
        cy[idx] = qy
        b = pos
        while b > 0:
            ai = chain[b - 1]
            bi = chain[b]
            ax, ay = cx[ai], cy[ai]
            calls += 1
            if (cx[bi] - ax) * (qy - ay) - (cy[bi] - ay) * (qx - ax) <= 0.0:
                b -= 1
            else:
                break
        f = pos + 1
        last = len(chain) - 1
        while f < last:
            vi = chain[f]
            wi = chain[f + 1]
            vx, vy = cx[vi], cy[vi]
            calls += 1
            if (vx - qx) * (cy[wi] - qy) - (vy - qy) * (cx[wi] - qx) <= 0.0:
                f += 1
            else:
                break
        chain[b + 1 : f] = [idx]
        size += b + 2 - f
        if size > max_temp:
            max_temp = size

    cycle: list[int] = []
    for j in range(p):
        cycle.extend(chains[j][:-1])
    return cycle, max_temp, calls
