import itertools
import math
import random

import pytest

from hullkit import (
    BoxMode,
    BucketOptions,
    EmptyInputError,
    Point,
    PointSet,
    SideBucket,
    bucket_chain,
    build_bucketed,
    find_extremes,
    triangle_filter_admit,
)
from hullkit.atbox import classify_sides
from hullkit.baselines import monotone_chain
from hullkit.bench import CostModel, predicted_operation_count
from hullkit.datagen import Distribution, generate

S5 = PointSet.from_pairs([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])


def test_build_s5():
    res = build_bucketed(S5, BoxMode.OCT)
    assert res.hull.cycle == (0, 1, 2, 3)


def test_build_circle_all_vertices():
    n = 2**8
    ps = generate(Distribution.CIRCLE, n, 17)
    res = build_bucketed(ps, BoxMode.OCT)
    assert len(res.hull) == n
    assert res.hull == monotone_chain(ps)


def test_build_empty():
    with pytest.raises(EmptyInputError):
        build_bucketed(PointSet.from_pairs([]))


def test_triangle_filter_first_point_becomes_far():
    ps = PointSet.from_pairs([(0, 0), (4, 0), (2, 3)])
    bucket = SideBucket(side=0)
    assert triangle_filter_admit(ps, bucket, 2, (Point(0, 0), Point(4, 0)))
    assert bucket.far_point == (2, 12.0)


def test_triangle_filter_examples():
    # far point (2,3) over side (0,0)->(4,0); (2,1) is strictly inside
    ps = PointSet.from_pairs([(0, 0), (4, 0), (2, 3), (2, 1), (3.5, 2)])
    corners = (Point(0, 0), Point(4, 0))
    bucket = SideBucket(side=0)
    assert triangle_filter_admit(ps, bucket, 2, corners)
    assert not triangle_filter_admit(ps, bucket, 3, corners)
    assert triangle_filter_admit(ps, bucket, 4, corners)
    assert bucket.far_point == (2, 12.0)  # (3.5,2) has |cross| 8, far keeps 12


def test_bucket_chain_examples():
    ps = PointSet.from_pairs([(0, 0), (4, 0), (1, -1), (3, -1)])
    assert bucket_chain(ps, [], 0, 1) == []
    assert bucket_chain(ps, [2, 3], 0, 1) == [2, 3]


def test_bucket_chain_collinear_outward_line():
    # members on one outward line: only extremes not dominated survive
    ps = PointSet.from_pairs([(0, 0), (4, 0), (1, -1), (2, -1), (3, -1)])
    assert bucket_chain(ps, [2, 3, 4], 0, 1) == [2, 4]


def test_bucket_chain_duplicates_keep_lowest_index():
    ps = PointSet.from_pairs([(0, 0), (4, 0), (2, -2), (2, -2)])
    assert bucket_chain(ps, [2, 3], 0, 1) == [2]
    ps2 = PointSet.from_pairs([(0, 0), (4, 0), (2, -2), (2, -2)])
    assert bucket_chain(ps2, [3, 2], 0, 1) == [2]


def test_all_option_combos_identical():
    rng = random.Random(202)
    combos = [BucketOptions(*bits) for bits in itertools.product([False, True], repeat=3)]
    assert len(combos) == 8
    for trial in range(40):
        n = rng.randint(1, 150)
        kind = trial % 4
        if kind == 0:
            pairs = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(n)]
        elif kind == 1:
            pairs = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
        elif kind == 2:
            pairs = [
                (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
                for k in range(n)
            ]
        else:
            pairs = [(k * 0.5, k * 0.5) for k in (rng.randint(0, 9) for _ in range(n))]
        ps = PointSet.from_pairs(pairs)
        oracle = monotone_chain(ps)
        mode = [BoxMode.QUAD, BoxMode.HEX, BoxMode.OCT][trial % 3]
        for opts in combos:
            res = build_bucketed(ps, mode, opts)
            assert res.hull == oracle, (trial, mode, opts)


def test_triangle_filter_soundness():
    # replicate the dispatch and check every discard is strictly inside
    # the final hull
    rng = random.Random(303)
    total_discards = 0
    for trial in range(50):
        n = rng.randint(20, 400)
        pairs = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
        ps = PointSet.from_pairs(pairs)
        box = find_extremes(ps, BoxMode.OCT)
        if box.p < 3:
            continue
        labels, _ = classify_sides(ps, box)
        hull = monotone_chain(ps)
        cyc = list(hull)
        xs, ys = ps.xs, ps.ys
        buckets = {j: SideBucket(side=j) for j in range(box.p)}
        for i in range(n):
            j = int(labels[i])
            if j < 0:
                continue
            lo = ps[box.corners[j]]
            hi = ps[box.corners[(j + 1) % box.p]]
            if triangle_filter_admit(ps, buckets[j], i, (lo, hi)):
                buckets[j].members.append(i)
                continue
            total_discards += 1
            m = len(cyc)
            for k in range(m):  # strictly left of every hull edge
                a, b = cyc[k], cyc[(k + 1) % m]
                v = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (ys[b] - ys[a]) * (xs[i] - xs[a])
                assert v > 0.0, (trial, i)
    assert total_discards > 50  # the filter actually discarded something


def test_bucketed_stats_envelope():
    ps = generate(Distribution.SQUARE, 10**4, 11)
    box = find_extremes(ps, BoxMode.OCT)
    res = build_bucketed(ps, BoxMode.OCT)
    bound = predicted_operation_count(CostModel.BUCKET_SORT, len(ps), box.p, 8, 0, 0)
    assert res.stats.orientation_calls <= 4 * bound
    assert res.stats.orientation_calls >= len(ps) - box.p
    assert res.stats.max_temp_hull >= len(res.hull)


def test_filter_on_off_same_hull_denser():
    ps = generate(Distribution.SQUARE, 10**4, 29)
    with_filter = build_bucketed(ps, BoxMode.OCT, BucketOptions(True, True, True))
    without = build_bucketed(ps, BoxMode.OCT, BucketOptions(False, True, True))
    assert with_filter.hull == without.hull
    # the filter can only shrink the working set
    assert with_filter.stats.max_temp_hull <= without.stats.max_temp_hull
