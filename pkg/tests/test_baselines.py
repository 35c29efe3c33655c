import math
import random

import pytest

from hullkit import (
    EmptyInputError,
    PointSet,
    graham_scan,
    jarvis_march,
    monotone_chain,
    quickhull,
)

S5 = PointSet.from_pairs([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
ALL = [monotone_chain, graham_scan, jarvis_march, quickhull]


@pytest.mark.parametrize("algo", ALL)
def test_s5(algo):
    assert algo(S5).cycle == (0, 1, 2, 3)


@pytest.mark.parametrize("algo", ALL)
def test_all_collinear(algo):
    ps = PointSet.from_pairs([(0, 0), (1, 1), (3, 3), (2, 2)])
    assert algo(ps).cycle == (0, 2)


@pytest.mark.parametrize("algo", ALL)
def test_single_point(algo):
    assert algo(PointSet.from_pairs([(7, -2)])).cycle == (0,)


@pytest.mark.parametrize("algo", ALL)
def test_eight_circle_points(algo):
    pairs = [
        (math.cos(2 * math.pi * k / 8), math.sin(2 * math.pi * k / 8)) for k in range(8)
    ]
    ps = PointSet.from_pairs(pairs)
    hull = algo(ps)
    assert len(hull) == 8
    assert hull == monotone_chain(ps)


@pytest.mark.parametrize("algo", ALL)
def test_duplicated_triangle(algo):
    ps = PointSet.from_pairs([(0, 0), (4, 0), (2, 3)] * 3)
    hull = algo(ps)
    assert len(hull) == 3
    assert hull.cycle == (0, 1, 2)  # duplicates resolve to the lowest index


@pytest.mark.parametrize("algo", ALL)
def test_empty_input(algo):
    with pytest.raises(EmptyInputError):
        algo(PointSet.from_pairs([]))


def test_oracle_idempotence():
    rng = random.Random(2024)
    for _ in range(30):
        n = rng.randint(1, 200)
        pairs = [(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(n)]
        ps = PointSet.from_pairs(pairs)
        hull = monotone_chain(ps)
        sub = PointSet.from_pairs([(ps.xs[i], ps.ys[i]) for i in hull])
        again = monotone_chain(sub)
        assert again.coords(sub) == hull.coords(ps)


def test_baselines_agree_on_adversarial_sets():
    rng = random.Random(1234)
    for trial in range(150):
        n = rng.randint(1, 60)
        kind = trial % 3
        if kind == 0:
            pairs = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n)]
        elif kind == 1:
            pairs = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
        else:
            pairs = [(k * 1.0, (k % 3) * 1.0) for k in (rng.randint(0, 6) for _ in range(n))]
        if trial % 4 == 0:
            pairs = pairs + [rng.choice(pairs)]
        ps = PointSet.from_pairs(pairs)
        expected = monotone_chain(ps)
        for algo in (graham_scan, jarvis_march, quickhull):
            assert algo(ps) == expected, (trial, algo.__name__, pairs[:8])
