"""Shared test helpers: instance builders and an independent oracle.

The oracle computes the minimum pairwise distance with vectorized full
distance matrices, a completely separate code path from the solvers it
checks.
"""

import math
import random

import numpy as np
import pytest

from closepair import Metric, PointSet


def uniform_points(n: int, seed: int) -> PointSet:
    rng = random.Random(seed)
    return PointSet((rng.random(), rng.random()) for _ in range(n))


def min_pair_distance_matrix(ps: PointSet, metric: Metric) -> float:
    """O(n^2) oracle over full numpy distance matrices."""
    x = np.asarray(ps.xs)
    y = np.asarray(ps.ys)
    dx = np.abs(x[:, None] - x[None, :])
    dy = np.abs(y[:, None] - y[None, :])
    p = metric.p
    if math.isinf(p):
        d = np.maximum(dx, dy)
    elif p == 1.0:
        d = dx + dy
    elif p == 2.0:
        d = np.sqrt(dx * dx + dy * dy)
    else:
        d = (dx**p + dy**p) ** (1.0 / p)
    iu = np.triu_indices(len(x), k=1)
    return float(d[iu].min())


@pytest.fixture
def metrics_all() -> list[Metric]:
    return [Metric(1.0), Metric(2.0), Metric(3.1415), Metric(math.inf)]
