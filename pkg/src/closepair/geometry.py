"""2D points and Minkowski p-distances.

All distance arithmetic in the package lives here. Distances are always
true metric values in coordinate units (the 1/p-th root is taken); no
caller ever sees a squared or otherwise power-transformed distance, so a
distance can be compared directly against a slab half-width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

__all__ = [
    "Point",
    "Metric",
    "parse_metric",
    "distance",
    "scalar_distance_fn",
    "Counters",
    "counted_distance",
]


class Point(NamedTuple):
    """A point in the plane with its 0-based position in the original input.

    ``id`` is assigned by the owning point set and is what solvers report;
    it defaults to 0 for free-standing points that only feed ``distance``.
    """

    x: float
    y: float
    id: int = 0


@dataclass(frozen=True)
class Metric:
    """A Minkowski p-distance, ``p >= 1`` or ``math.inf`` for the max norm.

    Infinity is a distinguished case handled without exponentiation, never
    approximated by a large finite p.
    """

    p: float

    def __post_init__(self) -> None:
        p = float(self.p)
        if math.isnan(p) or p < 1.0:
            raise ValueError(f"metric parameter must be >= 1 or inf, got {self.p!r}")
        object.__setattr__(self, "p", p)

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.p)

    def __str__(self) -> str:
        if self.is_inf:
            return "inf"
        if self.p == int(self.p):
            return str(int(self.p))
        return repr(self.p)


def parse_metric(text: str) -> Metric:
    """Parse a metric from a string such as ``"1"``, ``"3.1415"`` or ``"inf"``."""
    s = text.strip().lower()
    if s == "inf":
        return Metric(math.inf)
    try:
        p = float(s)
    except ValueError:
        raise ValueError(f"not a metric parameter: {text!r}") from None
    if math.isinf(p):
        return Metric(math.inf)
    return Metric(p)


# Signature of the specialized scalar kernels: (ax, ay, bx, by) -> distance.
DistanceFn = Callable[[float, float, float, float], float]


def scalar_distance_fn(metric: Metric) -> DistanceFn:
    """Return a scalar distance kernel specialized for ``metric``.

    Each kernel returns the true metric value. p = 1, 2 and inf get their
    natural closed forms (abs-sum, sqrt, max); other finite p use the
    general power form. The per-metric cost difference is intentional:
    distance evaluation cost is part of what the benchmark measures.
    """
    p = metric.p
    if metric.is_inf:

        def dist_inf(ax: float, ay: float, bx: float, by: float) -> float:
            dx = abs(ax - bx)
            dy = abs(ay - by)
            return dx if dx > dy else dy

        return dist_inf
    if p == 1.0:

        def dist_1(ax: float, ay: float, bx: float, by: float) -> float:
            return abs(ax - bx) + abs(ay - by)

        return dist_1
    if p == 2.0:

        def dist_2(ax: float, ay: float, bx: float, by: float) -> float:
            dx = ax - bx
            dy = ay - by
            return math.sqrt(dx * dx + dy * dy)

        return dist_2

    inv_p = 1.0 / p

    def dist_p(ax: float, ay: float, bx: float, by: float) -> float:
        return (abs(ax - bx) ** p + abs(ay - by) ** p) ** inv_p

    return dist_p


def distance(metric: Metric, a: Point, b: Point) -> float:
    """Minkowski p-distance between two points."""
    return scalar_distance_fn(metric)(a.x, a.y, b.x, b.y)


@dataclass
class Counters:
    """Instrumentation for one solver run.

    ``distance_calls_total`` counts every distance evaluation the solver
    performed; ``distance_calls_combine`` the subset made inside combine
    steps. The remaining fields record combine invocations, the largest
    slab seen, and the deepest recursion level (root = 0).
    """

    distance_calls_total: int = 0
    distance_calls_combine: int = 0
    combine_invocations: int = 0
    max_slab_points: int = 0
    recursion_depth_max: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "distance_calls_total": self.distance_calls_total,
            "distance_calls_combine": self.distance_calls_combine,
            "combine_invocations": self.combine_invocations,
            "max_slab_points": self.max_slab_points,
            "recursion_depth_max": self.recursion_depth_max,
        }


def counted_distance(
    metric: Metric, a: Point, b: Point, counters: Counters, combine: bool = False
) -> float:
    """Evaluate a distance and record it in ``counters``.

    Every distance a solver computes is counted exactly once; ``combine``
    marks evaluations made inside a combine step.
    """
    counters.distance_calls_total += 1
    if combine:
        counters.distance_calls_combine += 1
    return distance(metric, a, b)
