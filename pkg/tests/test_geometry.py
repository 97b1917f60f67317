import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closepair import Counters, Metric, Point, counted_distance, distance, parse_metric
from closepair.geometry import scalar_distance_fn

P_VALUES = [1.0, 2.0, 3.1415, math.inf]

coord = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def test_distance_p1_half_delta():
    # half-width case: one coordinate apart by delta/2 with delta = 1
    assert distance(Metric(1.0), Point(0.0, 0.0), Point(0.5, 0.0)) == 0.5


def test_distance_inf_is_max_norm():
    assert distance(Metric(math.inf), Point(0.0, 0.0), Point(1.0, 1.0)) == 1.0


def test_distance_p2_pythagorean():
    assert distance(Metric(2.0), Point(0.0, 0.0), Point(3.0, 4.0)) == 5.0


def test_distance_fractional_p():
    # 2 ** (1 / 3.1415), frozen from a 50-digit evaluation of exp(ln 2 / p)
    got = distance(Metric(3.1415), Point(0.0, 0.0), Point(1.0, 1.0))
    assert got == pytest.approx(1.2468771026765932, abs=1e-12)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.1415, 7.0, math.inf])
def test_distance_self_is_exactly_zero(p):
    pt = Point(0.1234567, -9.87e-5)
    assert distance(Metric(p), pt, pt) == 0.0


@pytest.mark.parametrize("text,expected", [("1", 1.0), ("2", 2.0), ("3.1415", 3.1415), ("inf", math.inf), ("INF", math.inf)])
def test_parse_metric(text, expected):
    assert parse_metric(text).p == expected


@pytest.mark.parametrize("text", ["0.5", "0", "-1", "nan", "abc", ""])
def test_parse_metric_rejects(text):
    with pytest.raises(ValueError):
        parse_metric(text)


def test_metric_rejects_sub_one_and_nan():
    with pytest.raises(ValueError):
        Metric(0.99)
    with pytest.raises(ValueError):
        Metric(math.nan)


@pytest.mark.parametrize("p,text", [(1.0, "1"), (2.0, "2"), (3.1415, "3.1415"), (math.inf, "inf")])
def test_metric_str_round_trips(p, text):
    m = Metric(p)
    assert str(m) == text
    assert parse_metric(str(m)) == m


@settings(max_examples=200, deadline=None)
@given(ax=coord, ay=coord, bx=coord, by=coord, p=st.sampled_from(P_VALUES))
def test_distance_symmetric(ax, ay, bx, by, p):
    m = Metric(p)
    a, b = Point(ax, ay), Point(bx, by)
    assert distance(m, a, b) == distance(m, b, a)


# float32-representable coordinates: differences never underflow when the
# p-th power is taken in float64, so "zero iff equal" holds exactly
coord32 = st.floats(
    min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False, width=32
)


@settings(max_examples=200, deadline=None)
@given(ax=coord32, ay=coord32, bx=coord32, by=coord32, p=st.sampled_from(P_VALUES))
def test_distance_nonnegative_zero_iff_equal(ax, ay, bx, by, p):
    m = Metric(p)
    d = distance(m, Point(ax, ay), Point(bx, by))
    assert d >= 0.0
    if ax == bx and ay == by:
        assert d == 0.0
    else:
        assert d > 0.0


@settings(max_examples=200, deadline=None)
@given(
    ax=coord, ay=coord, bx=coord, by=coord, cx=coord, cy=coord,
    p=st.sampled_from(P_VALUES),
)
def test_triangle_inequality(ax, ay, bx, by, cx, cy, p):
    m = Metric(p)
    a, b, c = Point(ax, ay), Point(bx, by), Point(cx, cy)
    assert distance(m, a, c) <= distance(m, a, b) + distance(m, b, c) + 1e-12


@settings(max_examples=200, deadline=None)
@given(ax=coord, ay=coord, bx=coord, by=coord)
def test_distance_non_increasing_in_p(ax, ay, bx, by):
    a, b = Point(ax, ay), Point(bx, by)
    grid = [1.0, 1.5, 2.0, 3.1415, 10.0, math.inf]
    values = [distance(Metric(p), a, b) for p in grid]
    for lo, hi in zip(values, values[1:]):
        assert hi <= lo + 1e-12


def test_scalar_fn_matches_point_distance():
    for p in P_VALUES:
        m = Metric(p)
        f = scalar_distance_fn(m)
        assert f(0.2, -0.3, 0.9, 0.4) == distance(m, Point(0.2, -0.3), Point(0.9, 0.4))


def test_counted_distance_increments_once():
    c = Counters()
    m = Metric(2.0)
    d = counted_distance(m, Point(0, 0), Point(3, 4), c)
    assert d == 5.0
    assert c.distance_calls_total == 1
    assert c.distance_calls_combine == 0
    counted_distance(m, Point(0, 0), Point(1, 1), c, combine=True)
    assert c.distance_calls_total == 2
    assert c.distance_calls_combine == 1


def test_counters_fresh_and_dict_order():
    c = Counters()
    assert all(v == 0 for v in c.as_dict().values())
    assert list(c.as_dict()) == [
        "distance_calls_total",
        "distance_calls_combine",
        "combine_invocations",
        "max_slab_points",
        "recursion_depth_max",
    ]
