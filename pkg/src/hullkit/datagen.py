"""Seeded synthetic point generators.

All randomness comes from one counter-based stream, "hullkit-splitmix64
v1", so any (distribution, n, seed) triple reproduces bit-for-bit across
runs, platforms and implementations:

    z = (seed + 0x9E3779B97F4A7C15 * k) mod 2**64        for k = 1, 2, ...
    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9  (mod 2**64)
    z ^= z >> 27;  z *= 0x94D049BB133111EB  (mod 2**64)
    output_k = z ^ (z >> 31)
    uniform_k = (output_k >> 11) * 2**-53                in [0, 1)

Distributions consume the uniform stream in a fixed order (documented on
``generate``); rejection sampling draws candidate pairs sequentially and
keeps the first n accepted, so chunking never changes the result.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .geometry import PointSet

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1

JITTER_SCALE = 1e-3  # circle angular jitter stays below JITTER_SCALE * gap


class Distribution(Enum):
    SQUARE = "square"
    DISK = "disk"
    GAUSS_DISK = "gauss"
    CIRCLE = "circle"
    COLLINEAR = "collinear"


def splitmix64(seed: int, k: int) -> int:
    """Scalar reference for the k-th (1-based) raw stream value."""
    z = (seed + _GAMMA * k) & _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


class UniformStream:
    """Sequential uniform [0, 1) doubles from the splitmix64 stream."""

    def __init__(self, seed: int):
        self._seed = np.uint64(seed & _MASK)
        self._cursor = 0

    def take(self, count: int) -> np.ndarray:
        ks = np.arange(self._cursor + 1, self._cursor + count + 1, dtype=np.uint64)
        self._cursor += count
        z = self._seed + ks * np.uint64(_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z = z ^ (z >> np.uint64(31))
        return (z >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def _rejection_pairs(stream: UniformStream, n: int, make, accept) -> tuple[np.ndarray, np.ndarray]:
    """First n accepted candidates, drawing uniform pairs in stream order."""
    xs_out: list[np.ndarray] = []
    ys_out: list[np.ndarray] = []
    have = 0
    while have < n:
        chunk = max(2 * (n - have), 1024)
        u = stream.take(2 * chunk)
        cx, cy = make(u[0::2], u[1::2])
        ok = accept(cx, cy)
        cx, cy = cx[ok], cy[ok]
        if cx.size > n - have:
            cx, cy = cx[: n - have], cy[: n - have]
        xs_out.append(cx)
        ys_out.append(cy)
        have += cx.size
    return np.concatenate(xs_out), np.concatenate(ys_out)


def generate(dist: Distribution | str, n: int, seed: int) -> PointSet:
    """n seeded points from the requested distribution.

    square:    pairs (u, v) become (x, y) = (u, v), i.i.d. on [0, 1)^2.
    disk:      pairs map to the [-1, 1)^2 square and are rejected outside
               the unit disk (x^2 + y^2 <= 1).
    gauss:     pairs become a Box-Muller normal deviate pair scaled by
               1/4 (r = sqrt(-2 ln(1 - u)), theta = 2 pi v), rejected
               outside the unit disk.
    circle:    point k sits at angle 2 pi k / n plus jitter
               (u_k - 1/2) * JITTER_SCALE * (2 pi / n), keeping every
               point a hull vertex while breaking exact symmetry.
    collinear: one draw per point, (x, y) = (u, u).
    """
    dist = Distribution(dist) if not isinstance(dist, Distribution) else dist
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return PointSet(np.empty(0), np.empty(0))
    stream = UniformStream(seed)

    if dist is Distribution.SQUARE:
        u = stream.take(2 * n)
        return PointSet(u[0::2].copy(), u[1::2].copy())

    if dist is Distribution.DISK:
        xs, ys = _rejection_pairs(
            stream,
            n,
            make=lambda u, v: (2.0 * u - 1.0, 2.0 * v - 1.0),
            accept=lambda x, y: x * x + y * y <= 1.0,
        )
        return PointSet(xs, ys)

    if dist is Distribution.GAUSS_DISK:
        def make(u, v):
            r = np.sqrt(-2.0 * np.log(1.0 - u))
            t = 2.0 * np.pi * v
            return 0.25 * r * np.cos(t), 0.25 * r * np.sin(t)

        xs, ys = _rejection_pairs(
            stream, n, make, accept=lambda x, y: x * x + y * y <= 1.0
        )
        return PointSet(xs, ys)

    if dist is Distribution.CIRCLE:
        gap = 2.0 * np.pi / n
        u = stream.take(n)
        angles = np.arange(n, dtype=np.float64) * gap + (u - 0.5) * (JITTER_SCALE * gap)
        return PointSet(np.cos(angles), np.sin(angles))

    u = stream.take(n)  # collinear: y = x at uniform random x
    return PointSet(u.copy(), u.copy())
