from decimal import Decimal
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smirnov_dominance.errors import CrossSampleTie, DimensionMismatch, InvalidTuple, RangeError
from smirnov_dominance.lattice import (
    LatticePath,
    SampleData,
    StepSequence,
    distinct_profiles,
    dominates,
    gnedenko_path,
    parse_tuple,
    path_from_tuple,
    profile,
    statistic,
    statistic_rational,
    steps_to_tuple,
    tuple_to_steps,
)
from smirnov_dominance.oracle import oracle_statistics

from conftest import paths


def test_path_from_tuple_examples():
    p = path_from_tuple((2, 2, 4), 4)
    assert p.n == 3 and p.m == 4 and str(p) == "<2,2,4>"
    assert path_from_tuple((0, 0), 4).t == (0, 0)
    with pytest.raises(InvalidTuple):
        path_from_tuple((3, 1), 4)
    with pytest.raises(InvalidTuple):
        path_from_tuple((-1, 1), 4)
    with pytest.raises(InvalidTuple):
        path_from_tuple((1, 5), 4)


def test_figure_one_vertices():
    # up one, east two, up two, east two
    p = path_from_tuple((2, 2, 4), 4)
    assert list(p.vertices()) == [(0, 0), (0, 1), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (4, 3)]
    assert str(tuple_to_steps(p)) == "NEENNEE"


def test_steps_to_tuple_examples():
    assert steps_to_tuple(StepSequence.parse("ENNEE")).t == (2, 2)
    assert steps_to_tuple(StepSequence.parse("NNNEEEE")).t == (4, 4, 4)
    assert steps_to_tuple(StepSequence.parse("EEEENNN")).t == (0, 0, 0)


def test_round_trip_all_4x4_paths():
    ps = paths(4, 4)
    assert len(ps) == 70
    for p in ps:
        s = tuple_to_steps(p)
        assert s.m == 4 and s.n == 4
        assert steps_to_tuple(s) == p


@pytest.mark.parametrize("m", range(0, 6))
@pytest.mark.parametrize("n", range(0, 6))
def test_round_trip_small_grids(m, n):
    for p in paths(m, n):
        assert steps_to_tuple(tuple_to_steps(p)) == p


def test_gnedenko_examples():
    d = SampleData((1, 4, 5), (2, 3))
    assert gnedenko_path(d).t == (2, 2)
    assert statistic(gnedenko_path(d)) == 2
    low = SampleData((1, 2, 3), (10, 11))
    assert statistic(gnedenko_path(low)) == 2 * 3
    with pytest.raises(CrossSampleTie):
        gnedenko_path(SampleData((1,), (1,)))


def test_sample_ingestion_exact_decimals():
    d = SampleData(("0.3", "0.1"), ("0.2",))
    assert d.xs == (Decimal("0.1"), Decimal("0.3"))
    # 1.0 and 1 are the same real number
    with pytest.raises(CrossSampleTie):
        gnedenko_path(SampleData(("1.0",), ("1",)))
    with pytest.raises(ValueError):
        SampleData((), (1,))


def test_within_sample_ties_allowed():
    assert gnedenko_path(SampleData((1, 1, 3), (2,))).t == (1,)


def test_statistic_examples():
    assert statistic(path_from_tuple((2, 2, 4), 4), "upper") == 2
    m, n = 5, 3
    east_first = LatticePath(m, (0,) * n)
    north_first = LatticePath(m, (m,) * n)
    assert statistic(east_first) == n * m
    assert statistic(north_first) == 0
    assert statistic(east_first, "lower") == 0
    assert statistic(north_first, "lower") == n * m
    assert statistic(north_first, "twosided") == n * m
    assert statistic_rational(east_first) == 1
    with pytest.raises(ValueError):
        statistic(east_first, "sideways")


def test_statistic_matches_step_walk_oracle():
    for m in range(1, 6):
        for n in range(1, 6):
            assert [statistic(p) for p in paths(m, n)] == oracle_statistics(m, n)


def test_dominates_examples():
    assert dominates(LatticePath(4, (2, 4)), LatticePath(4, (1, 3)))
    p = LatticePath(4, (1, 4))
    q = LatticePath(4, (2, 3))
    assert dominates(p, p)
    assert not dominates(p, q) and not dominates(q, p)
    with pytest.raises(DimensionMismatch):
        dominates(LatticePath(4, (1,)), LatticePath(3, (1,)))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (4, 2), (3, 4), (4, 4)])
def test_dominance_is_partial_order(m, n):
    ps = paths(m, n)
    for a in ps:
        assert dominates(a, a)
        for b in ps:
            if dominates(a, b) and dominates(b, a):
                assert a == b
            if dominates(a, b):
                for c in ps:
                    if dominates(b, c):
                        assert dominates(a, c)


def test_profile_examples():
    assert profile(4, 2, 0).t == (2, 4)
    assert profile(4, 2, 1).t == (2, 4)
    assert profile(4, 2, 2).t == (1, 3)
    assert profile(5, 3, 0).t == (2, 4, 5)
    assert profile(5, 3, 1).t == (2, 3, 5)
    with pytest.raises(RangeError):
        profile(4, 2, -1)
    with pytest.raises(RangeError):
        profile(4, 2, 9)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_profile_statistic_duality(m, n):
    stats = oracle_statistics(m, n)
    ps = paths(m, n)
    for r in range(0, n * m + 1):
        prof = profile(m, n, r)
        for w, s in zip(ps, stats):
            assert dominates(w, prof) == (s <= r)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_profiles_constant_between_multiples_of_gcd(m, n):
    d = gcd(m, n)
    prev = None
    for r in range(0, n * m + 1):
        assert profile(m, n, r) == profile(m, n, d * (r // d))
        cur = profile(m, n, r)
        if prev is not None:
            assert dominates(prev, cur)
        prev = cur


def test_distinct_profiles_examples():
    fam = distinct_profiles(3, 3)
    assert fam.values == [0, 3, 6, 9]
    assert [p.t for p in fam.paths] == [(1, 2, 3), (0, 1, 2), (0, 0, 1), (0, 0, 0)]
    assert distinct_profiles(4, 2).values == [0, 2, 4, 6, 8]
    assert len(distinct_profiles(5, 3)) == 12


def test_distinct_profiles_strictly_decrease():
    for m in range(1, 9):
        for n in range(1, 9):
            ps = distinct_profiles(m, n).paths
            for a, b in zip(ps, ps[1:]):
                assert a != b and dominates(a, b)
            assert ps[-1].t == (0,) * n


@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=12, unique=True),
    st.data(),
)
def test_gnedenko_statistic_against_ecdf(values, data):
    split = data.draw(st.integers(1, len(values) - 1)) if len(values) > 1 else None
    if split is None:
        return
    xs, ys = values[:split], values[split:]
    m, n = len(xs), len(ys)
    path = gnedenko_path(SampleData(tuple(xs), tuple(ys)))
    best = Fraction(0)
    for t in values:
        f = Fraction(sum(x <= t for x in xs), m)
        g = Fraction(sum(y <= t for y in ys), n)
        best = max(best, f - g)
    assert statistic_rational(path) == best


def test_parse_tuple():
    assert parse_tuple("<2,2,4>") == (2, 2, 4)
    assert parse_tuple("1 3") == (1, 3)
