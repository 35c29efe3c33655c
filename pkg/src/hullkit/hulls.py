"""Hull output types shared by every builder.

A hull is a cycle of input-point indices, counter-clockwise and strictly
convex (no collinear vertices).  ``canonicalize`` rotates a cycle to a
unique starting vertex so hulls from different algorithms compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .geometry import PointSet


class NotConvexError(ValueError):
    """Raised when a cycle claimed to be convex fails validation."""


@dataclass(frozen=True)
class HullIndices:
    """Canonical CCW cycle of input-point indices."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def __iter__(self) -> Iterator[int]:
        return iter(self.cycle)

    def coords(self, points: PointSet) -> list[tuple[float, float]]:
        xs, ys = points.xs, points.ys
        return [(float(xs[i]), float(ys[i])) for i in self.cycle]


@dataclass(frozen=True)
class BuildStats:
    """Counters recorded while a builder runs.

    max_temp_hull is the largest working vertex count observed (the
    temporary hull can exceed the final hull before later points displace
    vertices); orientation_calls tallies predicate evaluations with the
    early-exit semantics of the sequential scan.
    """

    n_prime_seen: int = 0
    max_temp_hull: int = 0
    orientation_calls: int = 0


@dataclass(frozen=True)
class HullResult:
    hull: HullIndices
    stats: BuildStats


def strictify(points: PointSet, cycle: list[int]) -> list[int]:
    """Drop vertices that do not make a strict left turn, until stable.

    A convex cycle can pick up collinear vertices when a pruning-box corner
    sits on a hull edge rather than at a hull vertex (possible when several
    input points tie an extreme objective); those corners are protected
    during the build and removed here.
    """
    xs, ys = points.xs, points.ys
    original = list(cycle)
    changed = True
    while changed and len(cycle) >= 3:
        changed = False
        m = len(cycle)
        keep = []
        for k in range(m):
            ax, ay = xs[cycle[k - 1]], ys[cycle[k - 1]]
            bx, by = xs[cycle[k]], ys[cycle[k]]
            cx, cy = xs[cycle[(k + 1) % m]], ys[cycle[(k + 1) % m]]
            if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0.0:
                keep.append(cycle[k])
            else:
                changed = True
        cycle = keep
    if not cycle and original:
        # every triple was collinear: keep the segment's lexicographic ends
        lo = min(original, key=lambda i: (xs[i], ys[i], i))
        hi = max(original, key=lambda i: (xs[i], ys[i], -i))
        cycle = [lo] if lo == hi else [lo, hi]
    if len(cycle) == 2:
        a, b = cycle
        if xs[a] == xs[b] and ys[a] == ys[b]:
            cycle = [min(a, b)]
    return cycle


def canonicalize(points: PointSet, cycle: Sequence[int]) -> HullIndices:
    """Rotate a convex CCW cycle to start at its lexicographically smallest
    vertex by (x, y); index breaks the (unreachable for distinct points) tie.

    Validates strict convexity of the input cycle and raises
    :class:`NotConvexError` on violation.
    """
    cyc = list(cycle)
    if not cyc:
        return HullIndices(())
    xs, ys = points.xs, points.ys
    if len(set(cyc)) != len(cyc):
        raise NotConvexError("cycle repeats an index")
    m = len(cyc)
    if m >= 3:
        for k in range(m):
            a, b, c = cyc[k - 1], cyc[k], cyc[(k + 1) % m]
            v = (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])
            if v <= 0.0:
                raise NotConvexError(
                    f"triple ({a},{b},{c}) is not a strict left turn (cross={v})"
                )
    start = min(range(m), key=lambda k: (xs[cyc[k]], ys[cyc[k]], cyc[k]))
    return HullIndices(tuple(cyc[start:] + cyc[:start]))
