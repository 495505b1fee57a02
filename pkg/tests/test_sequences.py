"""Unit tests for the exact integer sequences."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kurepa.sequences import (
    DensePoly,
    alt_left_factorial,
    bell,
    complementary_bell,
    consecutive_factorial_sum,
    derangement,
    factorial,
    factorial_sum,
    fubini_poly,
    guy_alternating,
    half_left_factorial,
    kurepa_poly,
    left_factorial,
    reciprocal_factorial_sum,
    stirling2,
    touchard_poly,
    wagstaff,
)

small_n = st.integers(min_value=0, max_value=120)


def test_factorial_values():
    assert [factorial(n) for n in range(9)] == [1, 1, 2, 6, 24, 120, 720, 5040, 40320]
    with pytest.raises(ValueError):
        factorial(-1)


def test_left_factorial_values():
    assert [left_factorial(n) for n in range(1, 9)] == [1, 2, 4, 10, 34, 154, 874, 5914]
    assert left_factorial(10) == 409114


def test_left_factorial_rejects_zero():
    # the empty-sum convention is applied by callers, not by the function
    with pytest.raises(ValueError):
        left_factorial(0)


@given(st.integers(min_value=1, max_value=200))
def test_left_factorial_difference(n):
    assert left_factorial(n + 1) - left_factorial(n) == math.factorial(n)


def test_factorial_sum_values():
    assert [factorial_sum(n) for n in range(9)] == [0, 2, 4, 10, 34, 154, 874, 5914, 46234]


@given(st.integers(min_value=1, max_value=200))
def test_factorial_sum_is_shifted_left_factorial(n):
    assert factorial_sum(n) == left_factorial(n + 1)


@given(st.integers(min_value=0, max_value=200))
def test_half_left_factorial_doubles_back(n):
    assert 2 * half_left_factorial(n) == factorial_sum(n)


def test_half_left_factorial_values():
    assert [half_left_factorial(n) for n in range(6)] == [0, 1, 2, 5, 17, 77]


def test_alt_left_factorial_values():
    assert [alt_left_factorial(n) for n in range(9)] == [0, 1, 0, 2, -4, 20, -100, 620, -4420]


@given(st.integers(min_value=0, max_value=150))
def test_alt_left_factorial_recurrence(n):
    # adding the m = n term with sign (-1)^n
    sign = 1 if n % 2 == 0 else -1
    assert alt_left_factorial(n + 1) == alt_left_factorial(n) + sign * math.factorial(n)


def test_guy_alternating_values():
    assert [guy_alternating(n) for n in range(9)] == [0, 1, 1, 5, 19, 101, 619, 4421, 35899]


@given(st.integers(min_value=1, max_value=150))
def test_guy_alternating_recurrence(n):
    assert guy_alternating(n) + guy_alternating(n - 1) == math.factorial(n)


def test_wagstaff_is_left_factorial_minus_one():
    assert [wagstaff(n) for n in range(1, 9)] == [0, 1, 3, 9, 33, 153, 873, 5913]
    with pytest.raises(ValueError):
        wagstaff(0)


def test_bell_values():
    assert [bell(n) for n in range(10)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]


@given(st.integers(min_value=0, max_value=60))
def test_bell_is_stirling_row_sum(n):
    assert bell(n) == sum(stirling2(n, k) for k in range(n + 1))


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60))
def test_stirling_recurrence(n, k):
    if k > n:
        return
    # outside the triangle the count is zero
    def s(m, j):
        return stirling2(m, j) if 0 <= j <= m else 0

    assert stirling2(n, k) == k * s(n - 1, k) + s(n - 1, k - 1)


def test_stirling_bounds():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    with pytest.raises(ValueError):
        stirling2(3, 4)
    with pytest.raises(ValueError):
        stirling2(3, -1)


def test_complementary_bell_values():
    assert [complementary_bell(n) for n in range(9)] == [1, -1, 0, 1, 1, -2, -9, -9, 50]


@given(st.integers(min_value=0, max_value=60))
def test_complementary_bell_is_alternating_row_sum(n):
    want = sum((-1) ** k * stirling2(n, k) for k in range(n + 1))
    assert complementary_bell(n) == want


def test_derangement_values():
    assert [derangement(n) for n in range(9)] == [1, 0, 1, 2, 9, 44, 265, 1854, 14833]


@given(st.integers(min_value=1, max_value=200))
def test_derangement_recurrence(n):
    assert derangement(n) == n * derangement(n - 1) + (-1) ** n


def test_touchard_poly_at_special_points():
    assert touchard_poly(4).coeffs == (0, 1, 7, 6, 1)
    for n in range(12):
        assert touchard_poly(n).eval(1) == bell(n)
        assert touchard_poly(n).eval(-1) == complementary_bell(n)


def test_fubini_poly():
    assert fubini_poly(3).coeffs == (0, 1, 6, 6)
    # ordered Bell numbers at x = 1
    assert [fubini_poly(n).eval(1) for n in range(6)] == [1, 1, 3, 13, 75, 541]


def test_kurepa_poly():
    assert kurepa_poly(0).coeffs == (1,)
    assert kurepa_poly(3).coeffs == (1, 1, 2, 6)
    for n in range(10):
        assert kurepa_poly(n).eval(1) == left_factorial(n + 1)


def test_dense_poly_trims_and_evaluates():
    p = DensePoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert DensePoly(()).degree == -1
    assert DensePoly((0, 0)).coeffs == ()
    assert p.eval(Fraction(1, 2)) == 2
    assert p.eval(3) == 7


@given(st.lists(st.integers(min_value=-50, max_value=50), max_size=8), st.integers(-9, 9))
def test_dense_poly_eval_matches_naive_sum(coeffs, x):
    p = DensePoly(tuple(coeffs))
    assert p.eval(x) == sum(c * x**k for k, c in enumerate(coeffs))


def test_consecutive_factorial_sum():
    assert consecutive_factorial_sum(2, 3) == 2 + 6 + 24
    assert consecutive_factorial_sum(0, 8) == left_factorial(8)
    with pytest.raises(ValueError):
        consecutive_factorial_sum(-1, 3)
    with pytest.raises(ValueError):
        consecutive_factorial_sum(0, 0)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=40))
def test_consecutive_factorial_sum_telescopes(k, n):
    assert consecutive_factorial_sum(k, n) == left_factorial(k + n) - (
        left_factorial(k) if k else 0
    )


def test_reciprocal_factorial_sum():
    assert reciprocal_factorial_sum(0, 3) == Fraction(5, 2)
    assert reciprocal_factorial_sum(2, 2) == Fraction(1, 2) + Fraction(1, 6)
    with pytest.raises(ValueError):
        reciprocal_factorial_sum(0, 0)


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=1, max_value=30))
def test_reciprocal_factorial_sum_exact(k, n):
    want = sum(Fraction(1, math.factorial(m)) for m in range(k, k + n))
    assert reciprocal_factorial_sum(k, n) == want
