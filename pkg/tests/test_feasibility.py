from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from ap3lattice.feasibility import find_point


def test_simple_box():
    assert find_point(2, [], [([1, 0], 1), ([0, 1], 2)]) == [1, 2]


def test_equality_and_infeasible():
    p = find_point(2, [([1, -1], 0)], [([1, 0], 3)])
    assert p[0] == p[1] >= 3
    assert find_point(1, [], [([1], 2), ([-1], -1)]) is None
    assert find_point(2, [([1, 1], 1), ([1, 1], 2)], []) is None


def test_fractional_solution():
    p = find_point(2, [([2, -1], 0)], [([1, 0], Fraction(1, 2))])
    assert p == [Fraction(1, 2), 1]


rows = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(rows, st.integers(-4, 4)), max_size=2),
       st.lists(st.tuples(rows, st.integers(-4, 4)), max_size=5))
def test_returned_points_satisfy_constraints(eqs, ineqs):
    p = find_point(3, eqs, ineqs)
    if p is None:
        return
    for a, b in eqs:
        assert sum(x * y for x, y in zip(a, p)) == b
    for a, b in ineqs:
        assert sum(x * y for x, y in zip(a, p)) >= b


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.tuples(rows, st.integers(-4, 4)), max_size=5))
def test_feasible_systems_are_found(x, rows_):
    # constraints built to hold at x can never be reported infeasible
    ineqs = [(a, min(b, sum(u * v for u, v in zip(a, x)))) for a, b in rows_]
    assert find_point(3, [], ineqs) is not None
