"""Closest-pair solvers: brute force and divide and conquer.

The divide-and-conquer framework presorts once, splits at the lower median
of the x-order, recurses, and then closes the central slab with one of two
combine variants: ``basic7`` (merge the slab and probe the next seven
y-neighbours of every slab point) or ``basic2`` (walk the two slab sides in
parallel, probing for each visited point the two closest not-lower points
on the opposite side, at most two distance evaluations per slab point).

Hot paths work on id lists over flat coordinate arrays; ``Point`` objects
only appear at the API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

from .geometry import Counters, DistanceFn, Metric, Point, scalar_distance_fn

__all__ = [
    "Algo",
    "PointSet",
    "SortedViews",
    "PairResult",
    "sorted_views",
    "split",
    "slab_filter",
    "combine_basic2",
    "combine_basic7",
    "brute_force",
    "solve",
]

# Per-invocation audit record: (slab point count, distance calls made).
CombineAudit = list


class Algo(str, Enum):
    """Solver selection for :func:`solve`."""

    BASIC2 = "basic2"
    BASIC7 = "basic7"
    BRUTE = "brute"


class PointSet:
    """An immutable set of n >= 2 finite points, ids 0..n-1 in input order."""

    __slots__ = ("xs", "ys")

    def __init__(self, coords: Iterable[tuple[float, float]]):
        xs: list[float] = []
        ys: list[float] = []
        for i, (x, y) in enumerate(coords):
            x = float(x)
            y = float(y)
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"non-finite coordinate at point {i}: ({x!r}, {y!r})")
            xs.append(x)
            ys.append(y)
        if len(xs) < 2:
            raise ValueError("point set too small (need at least 2 points)")
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "PointSet":
        return cls((p.x, p.y) for p in points)

    @property
    def n(self) -> int:
        return len(self.xs)

    def __len__(self) -> int:
        return len(self.xs)

    def point(self, i: int) -> Point:
        return Point(self.xs[i], self.ys[i], i)

    def __iter__(self) -> Iterator[Point]:
        for i in range(len(self.xs)):
            yield Point(self.xs[i], self.ys[i], i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __repr__(self) -> str:
        return f"PointSet(n={len(self.xs)})"


class SortedViews(NamedTuple):
    """Index permutations of a point set.

    ``by_x`` sorts by (x, y, id) ascending, ``by_y`` by (y, x, id); both
    keys are total orders, so the views are deterministic even when
    coordinates repeat.
    """

    by_x: list[int]
    by_y: list[int]


@dataclass(frozen=True)
class PairResult:
    """The closest pair found: ids with index_a < index_b, its distance,
    and the instrumentation counters of the run that produced it."""

    index_a: int
    index_b: int
    dist: float
    counters: Counters


def sorted_views(ps: PointSet) -> SortedViews:
    """Presort a point set into its x-order and y-order index views."""
    xs = np.asarray(ps.xs)
    ys = np.asarray(ps.ys)
    # lexsort is stable, so equal (primary, secondary) keys keep input
    # order, which is exactly the id tie-break.
    by_x = np.lexsort((ys, xs)).tolist()
    by_y = np.lexsort((xs, ys)).tolist()
    return SortedViews(by_x, by_y)


def split(
    xs: Sequence[float],
    order_x: Sequence[int],
    rank: Sequence[int],
    y_ids: Sequence[int],
    lo: int,
    hi: int,
) -> tuple[int, float, list[int], list[int]]:
    """Split the x-order range [lo, hi) at its lower median.

    Returns ``(mid, x_median, y_left, y_right)``. The left half is the
    first ceil(m/2) points of the x-order slice and ``x_median`` is the x
    of its last point. Side membership is decided by x-order rank, never
    by comparing coordinates, so duplicate x values split evenly. The
    y-sorted id list is partitioned stably, preserving y order per side.
    """
    m = hi - lo
    if m < 2:
        raise ValueError("cannot split a range of fewer than 2 points")
    mid = lo + (m + 1) // 2
    x_median = xs[order_x[mid - 1]]
    y_left = [i for i in y_ids if rank[i] < mid]
    y_right = [i for i in y_ids if rank[i] >= mid]
    return mid, x_median, y_left, y_right


def slab_filter(
    y_ids: Sequence[int], xs: Sequence[float], x_median: float, delta: float
) -> list[int]:
    """Keep the points with |x - x_median| strictly below delta, y order intact.

    Strict comparison: a cross pair whose points sit a full delta apart
    horizontally can never beat delta, and delta = 0 (duplicate points)
    degenerates to an empty slab.
    """
    lo = x_median - delta
    hi = x_median + delta
    return [i for i in y_ids if lo < xs[i] < hi]


def combine_basic2(
    y_left: Sequence[int],
    y_right: Sequence[int],
    xs: Sequence[float],
    ys: Sequence[float],
    delta: float,
    dfun: DistanceFn,
    counters: Counters,
    audit: Optional[CombineAudit] = None,
) -> tuple[float, Optional[tuple[int, int]]]:
    """Two-probe combine over separate y-sorted slab sides.

    Walks the lower of the two current heads upward. Each iteration
    evaluates the cross pair at the heads, then (if the lower head's side
    is about to advance) the lower head against the successor of the
    opposite head: the two closest not-lower opposite points. At most two
    distance evaluations per iteration and one advance, so distance calls
    never exceed 2 * (len(y_left) + len(y_right)).

    Returns ``(best, pair)`` where ``pair`` is a cross pair strictly
    closer than ``delta``, or ``None`` when no such pair exists.
    """
    d_min = delta
    bi = bj = -1
    calls = 0
    nl = len(y_left)
    nr = len(y_right)
    li = 0
    ri = 0
    while li < nl and ri < nr:
        i = y_left[li]
        j = y_right[ri]
        d = dfun(xs[i], ys[i], xs[j], ys[j])
        calls += 1
        if d < d_min:
            d_min = d
            bi = i
            bj = j
        if ys[i] <= ys[j]:  # tie: treat left as the lower point
            rn = ri + 1
            if rn < nr:
                k = y_right[rn]
                d = dfun(xs[i], ys[i], xs[k], ys[k])
                calls += 1
                if d < d_min:
                    d_min = d
                    bi = i
                    bj = k
            li += 1
        else:
            ln = li + 1
            if ln < nl:
                k = y_left[ln]
                d = dfun(xs[j], ys[j], xs[k], ys[k])
                calls += 1
                if d < d_min:
                    d_min = d
                    bi = k
                    bj = j
            ri += 1
    counters.distance_calls_total += calls
    counters.distance_calls_combine += calls
    if audit is not None:
        audit.append((nl + nr, calls))
    if bi >= 0:
        return d_min, (bi, bj)
    return d_min, None


def combine_basic7(
    y_left: Sequence[int],
    y_right: Sequence[int],
    xs: Sequence[float],
    ys: Sequence[float],
    delta: float,
    dfun: DistanceFn,
    counters: Counters,
    audit: Optional[CombineAudit] = None,
) -> tuple[float, Optional[tuple[int, int]]]:
    """Classic seven-probe combine.

    Merges the slab sides into one y-sorted sequence and evaluates each
    point against its next seven neighbours unconditionally (same-side
    pairs included; they can never win but are part of the classic cost).
    Distance calls never exceed 7 * slab size.
    """
    slab = sorted(list(y_left) + list(y_right), key=lambda i: (ys[i], xs[i], i))
    d_min = delta
    bi = bj = -1
    calls = 0
    k = len(slab)
    for a in range(k - 1):
        i = slab[a]
        ax = xs[i]
        ay = ys[i]
        stop = a + 8
        if stop > k:
            stop = k
        for b in range(a + 1, stop):
            j = slab[b]
            d = dfun(ax, ay, xs[j], ys[j])
            calls += 1
            if d < d_min:
                d_min = d
                bi = i
                bj = j
    counters.distance_calls_total += calls
    counters.distance_calls_combine += calls
    if audit is not None:
        audit.append((k, calls))
    if bi >= 0:
        return d_min, (bi, bj)
    return d_min, None


def _scan_pairs(
    ids: Sequence[int],
    xs: Sequence[float],
    ys: Sequence[float],
    dfun: DistanceFn,
    counters: Counters,
) -> tuple[float, int, int]:
    """All-pairs scan over ``ids``; first-found pair wins ties."""
    best = math.inf
    bi = bj = -1
    k = len(ids)
    for a in range(k - 1):
        i = ids[a]
        ax = xs[i]
        ay = ys[i]
        for b in range(a + 1, k):
            j = ids[b]
            d = dfun(ax, ay, xs[j], ys[j])
            if d < best:
                best = d
                bi = i
                bj = j
    counters.distance_calls_total += k * (k - 1) // 2
    return best, bi, bj


def _ordered_result(bi: int, bj: int, dist: float, counters: Counters) -> PairResult:
    if bi > bj:
        bi, bj = bj, bi
    return PairResult(bi, bj, dist, counters)


def brute_force(ps: PointSet, metric: Metric) -> PairResult:
    """Examine all n(n-1)/2 pairs; ties go to the smallest (index_a, index_b)."""
    if len(ps) < 2:
        raise ValueError("point set too small (need at least 2 points)")
    counters = Counters()
    dfun = scalar_distance_fn(metric)
    # Ascending (i, j) enumeration with strict improvement keeps the
    # lexicographically smallest pair on ties.
    best, bi, bj = _scan_pairs(range(len(ps)), ps.xs, ps.ys, dfun, counters)
    return _ordered_result(bi, bj, best, counters)


def solve(
    ps: PointSet,
    metric: Metric,
    algo: Algo = Algo.BASIC2,
    cutoff: int = 10,
    combine_audit: Optional[CombineAudit] = None,
) -> PairResult:
    """Find the closest pair of ``ps`` under ``metric``.

    ``cutoff`` is the recursion base-case size (ranges at most this long
    are scanned exhaustively). ``combine_audit``, when given a list,
    receives one ``(slab_size, distance_calls)`` tuple per combine
    invocation. The result distance always equals the brute-force
    distance; the reported pair can differ only between exact ties.
    """
    algo = Algo(algo)
    if len(ps) < 2:
        raise ValueError("point set too small (need at least 2 points)")
    if cutoff < 2:
        raise ValueError(f"cutoff must be at least 2, got {cutoff}")
    if algo is Algo.BRUTE:
        return brute_force(ps, metric)

    xs = ps.xs
    ys = ps.ys
    dfun = scalar_distance_fn(metric)
    views = sorted_views(ps)
    order_x = views.by_x
    n = len(ps)
    rank = [0] * n
    for r, i in enumerate(order_x):
        rank[i] = r
    combine = combine_basic2 if algo is Algo.BASIC2 else combine_basic7
    counters = Counters()

    def rec(lo: int, hi: int, y_ids: list[int], depth: int) -> tuple[float, int, int]:
        if depth > counters.recursion_depth_max:
            counters.recursion_depth_max = depth
        m = hi - lo
        if m <= cutoff:
            return _scan_pairs(order_x[lo:hi], xs, ys, dfun, counters)

        mid, x_median, y_left, y_right = split(xs, order_x, rank, y_ids, lo, hi)

        best, bi, bj = rec(lo, mid, y_left, depth + 1)
        dr, ri_, rj_ = rec(mid, hi, y_right, depth + 1)
        if dr < best:
            best, bi, bj = dr, ri_, rj_

        counters.combine_invocations += 1
        slab_l = slab_filter(y_left, xs, x_median, best)
        slab_r = slab_filter(y_right, xs, x_median, best)
        size = len(slab_l) + len(slab_r)
        if size > counters.max_slab_points:
            counters.max_slab_points = size
        d_cross, pair = combine(
            slab_l, slab_r, xs, ys, best, dfun, counters, combine_audit
        )
        if pair is not None:
            best = d_cross
            bi, bj = pair
        return best, bi, bj

    best, bi, bj = rec(0, n, views.by_y, 0)
    return _ordered_result(bi, bj, best, counters)
