"""hullkit: planar convex hulls via extreme-point pruning.

The pruning box (quadrilateral, hexagon or octagon of directional
extremes) does more than discard interior points: the side each outside
point violates localises all further hull work.  This package provides
the box itself, an anchored incremental builder that grows the hull
during the pruning scan, a bucketed sort-based builder, a plain
incremental builder, four reference algorithms, seeded data generators,
and a benchmark CLI.
"""

from .anchored import (
    AnchoredHull,
    AtOptions,
    BadSideError,
    SearchStrategy,
    build_at_incremental,
    locate_insertion,
    splice_vertex,
)
from .atbox import BoxMode, BoxSpec, FilterResult, filter_interior, find_extremes
from .baselines import graham_scan, jarvis_march, monotone_chain, quickhull
from .bench import (
    BenchConfig,
    BenchRecord,
    CostModel,
    DegenerateFitError,
    PowerFit,
    fit_power_law,
    predicted_operation_count,
    run_bench,
    verify_equivalence,
)
from .bucketed import (
    BucketOptions,
    SideBucket,
    bucket_chain,
    build_bucketed,
    triangle_filter_admit,
)
from .datagen import Distribution, generate, splitmix64
from .geometry import (
    EmptyChainError,
    EmptyInputError,
    Orientation,
    Point,
    PointSet,
    cross,
    orientation,
    point_vs_chain,
)
from .hulls import BuildStats, HullIndices, HullResult, NotConvexError, canonicalize
from .incremental import AllCollinear, build_incremental, seed_triangle

__version__ = "0.1.0"

__all__ = [
    "AllCollinear",
    "AnchoredHull",
    "AtOptions",
    "BadSideError",
    "BenchConfig",
    "BenchRecord",
    "BoxMode",
    "BoxSpec",
    "BucketOptions",
    "BuildStats",
    "CostModel",
    "DegenerateFitError",
    "Distribution",
    "EmptyChainError",
    "EmptyInputError",
    "FilterResult",
    "HullIndices",
    "HullResult",
    "NotConvexError",
    "Orientation",
    "Point",
    "PointSet",
    "PowerFit",
    "SearchStrategy",
    "SideBucket",
    "bucket_chain",
    "build_at_incremental",
    "build_bucketed",
    "build_incremental",
    "canonicalize",
    "cross",
    "filter_interior",
    "find_extremes",
    "fit_power_law",
    "generate",
    "graham_scan",
    "jarvis_march",
    "locate_insertion",
    "monotone_chain",
    "orientation",
    "point_vs_chain",
    "predicted_operation_count",
    "quickhull",
    "run_bench",
    "seed_triangle",
    "splice_vertex",
    "splitmix64",
    "triangle_filter_admit",
    "verify_equivalence",
]
