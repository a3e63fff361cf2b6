from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hwweights import _exact
from hwweights._lp import feasible_point, strict_solution

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_parse_rational():
    assert _exact.parse_rational("-3/2") == Fraction(-3, 2)
    assert _exact.parse_rational(" 4 ") == 4
    with pytest.raises(ValueError):
        _exact.parse_rational("0.5")
    with pytest.raises(ValueError):
        _exact.parse_rational("")


def test_fmt():
    assert _exact.fmt(Fraction(6, 4)) == "3/2"
    assert _exact.fmt(Fraction(-2)) == "-2"


def test_rank_known():
    assert _exact.rank([[1, 2], [2, 4]]) == 1
    assert _exact.rank([[0, 0], [0, 0]]) == 0
    assert _exact.rank([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 3


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_rref_and_transpose(m):
    r = _exact.rank(m)
    rows, pivots = _exact.rref(m)
    assert r == len(pivots)
    assert r == _exact.rank([list(col) for col in zip(*m)])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_is_annihilated(m):
    basis = _exact.nullspace(m)
    assert len(basis) == len(m[0]) - _exact.rank(m)
    for v in basis:
        assert all(x == 0 for x in _exact.mat_vec(m, v))


def test_inverse():
    a = [[2, -1], [-1, 2]]
    inv = _exact.inverse(a)
    assert _exact.mat_mul(a, inv) == ((1, 0), (0, 1))


def test_feasible_point_simple():
    x = feasible_point([[1, 1]], [4], [[1, -1]], [0], 2)
    assert x is not None and x[0] == x[1] and x[0] + x[1] <= 4
    assert feasible_point([[1]], [-1], [], [], 1) is None


def test_feasible_point_free_variables():
    x = feasible_point([[1]], [-3], [], [], 1, free=True)
    assert x is not None and x[0] <= -3


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=6))
def test_strict_solution_certificate(rows):
    p = strict_solution(rows)
    if p is not None:
        assert all(_exact.dot(r, p) <= -1 for r in rows)
    else:
        # infeasible: some nonnegative combination of rows vanishes
        combo = feasible_point([], [], [list(c) for c in zip(*rows)] + [[1] * len(rows)],
                               [0, 0, 1], len(rows))
        assert combo is not None
