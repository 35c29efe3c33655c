"""Planar predicates and point containers used by every hull builder.

All predicates are plain double-precision cross products compared exactly
against zero.  Collinear is never classified as "right", so boundary points
count as interior and every hull produced downstream is strictly convex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np


class EmptyInputError(ValueError):
    """Raised when an operation requires at least one point."""


class EmptyChainError(ValueError):
    """Raised when a chain query is given an empty vertex range."""


class Orientation(Enum):
    LEFT = 1
    RIGHT = -1
    COLLINEAR = 0


@dataclass(frozen=True)
class Point:
    """An immutable planar point with finite coordinates."""

    x: float
    y: float

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y


class PointSet:
    """An indexed, immutable collection of points.

    Coordinates are held as two float64 arrays so bulk operations can run
    vectorised; ``__getitem__`` materialises individual :class:`Point`
    values.  Indices into the set are the currency of every hull algorithm.
    Non-finite coordinates are rejected at construction.
    """

    __slots__ = ("xs", "ys")

    def __init__(self, xs: np.ndarray, ys: np.ndarray):
        xs = np.ascontiguousarray(xs, dtype=np.float64)
        ys = np.ascontiguousarray(ys, dtype=np.float64)
        if xs.ndim != 1 or ys.ndim != 1 or xs.shape != ys.shape:
            raise ValueError("xs and ys must be 1-D arrays of equal length")
        if xs.size and not (np.isfinite(xs).all() and np.isfinite(ys).all()):
            raise ValueError("coordinates must be finite (no NaN/Inf)")
        xs.setflags(write=False)
        ys.setflags(write=False)
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> "PointSet":
        pts = list(pairs)
        xs = np.array([p[0] for p in pts], dtype=np.float64)
        ys = np.array([p[1] for p in pts], dtype=np.float64)
        return cls(xs, ys)

    def __len__(self) -> int:
        return self.xs.size

    def __getitem__(self, i: int) -> Point:
        return Point(float(self.xs[i]), float(self.ys[i]))

    def __iter__(self) -> Iterator[Point]:
        for x, y in zip(self.xs, self.ys):
            yield Point(float(x), float(y))

    def pairs(self) -> list[tuple[float, float]]:
        """Coordinates as a list of (x, y) tuples of Python floats."""
        return list(zip(self.xs.tolist(), self.ys.tolist()))

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)})"


def cross(a: Point, b: Point, p: Point) -> float:
    """Signed cross product of (b - a) and (p - a).

    Positive when p is left of the directed line a->b; the magnitude is
    proportional to the distance of p from that line, which is what the
    farthest-point selections compare.
    """
    return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Classify c against the directed line a->b."""
    v = cross(a, b, c)
    if v > 0.0:
        return Orientation.LEFT
    if v < 0.0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def point_vs_chain(
    p: Point,
    vertices: Sequence[Point],
    lo: int = 0,
    hi: int | None = None,
    closed: bool = True,
) -> int | None:
    """Test p against the convex CCW chain vertices[lo:hi].

    Returns None when p is left of or collinear with every segment
    (inside), otherwise the smallest segment index, counted from lo, for
    which p is strictly right.  The scan stops at the first right segment.
    When ``closed`` the final segment wraps from the last vertex back to
    vertices[lo].
    """
    if hi is None:
        hi = len(vertices)
    n = hi - lo
    if n <= 0:
        raise EmptyChainError("chain range is empty")
    px, py = p.x, p.y
    last = n if closed else n - 1
    for k in range(last):
        a = vertices[lo + k]
        b = vertices[lo + (k + 1) % n]
        if (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x) < 0.0:
            return k
    return None


def validate_finite(x: float, y: float) -> None:
    """Reject non-finite coordinates at ingestion boundaries."""
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinate ({x!r}, {y!r})")
