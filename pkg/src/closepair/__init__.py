"""Closest-pair-of-points toolkit.

Brute-force and divide-and-conquer solvers over Minkowski p-metrics, with
distance-call instrumentation, deterministic instance generation, a
verification harness, and a timing benchmark that reports basic2/basic7
ratio tables and figures.
"""

from .geometry import (
    Counters,
    Metric,
    Point,
    counted_distance,
    distance,
    parse_metric,
    scalar_distance_fn,
)
from .solver import (
    Algo,
    PairResult,
    PointSet,
    SortedViews,
    brute_force,
    combine_basic2,
    combine_basic7,
    slab_filter,
    solve,
    sorted_views,
    split,
)
from .instances import (
    Clustered,
    GenSpec,
    PointFileError,
    UniformBox,
    UniformUnitSquare,
    generate,
    parse_distribution,
    read_points,
    write_points,
)
from .bench import (
    BenchPlan,
    BenchRecord,
    RatioRow,
    format_ratio_csv,
    format_ratio_gnuplot,
    format_ratio_text,
    format_records_csv,
    ratio_table,
    run_plan,
)
from .figures import render_ratio_figure
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "Algo",
    "BenchPlan",
    "BenchRecord",
    "Clustered",
    "Counters",
    "GenSpec",
    "Metric",
    "PairResult",
    "Point",
    "PointFileError",
    "PointSet",
    "RatioRow",
    "SortedViews",
    "UniformBox",
    "UniformUnitSquare",
    "VerificationReport",
    "brute_force",
    "combine_basic2",
    "combine_basic7",
    "counted_distance",
    "distance",
    "format_ratio_csv",
    "format_ratio_gnuplot",
    "format_ratio_text",
    "format_records_csv",
    "generate",
    "parse_distribution",
    "parse_metric",
    "ratio_table",
    "read_points",
    "render_ratio_figure",
    "run_plan",
    "run_verification",
    "scalar_distance_fn",
    "slab_filter",
    "solve",
    "sorted_views",
    "split",
    "write_points",
]
