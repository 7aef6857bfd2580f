import pytest
from hypothesis import given
from hypothesis import strategies as st

from inveul.closed_forms import (
    SnParams,
    a_explicit,
    b_explicit,
    binomial,
    forward_differences,
    i_closed,
    j_closed,
    j_degree_check,
    s_recurrence_residual,
    s_sequence,
    verify_s_recurrence,
)
from inveul.errors import IndexOutOfRange, OddIndex
from inveul.recurrences import a_row, b_row, i_row, j_row


def test_binomial():
    assert binomial(7, 2) == 21
    assert binomial(-1, 0) == 1
    assert binomial(5, -1) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6  # (-3)(-4)/2
    assert binomial(2, 5) == 0


@given(st.integers(-30, 30), st.integers(0, 12))
def test_binomial_matches_falling_factorial(m, j):
    num = 1
    for i in range(j):
        num *= m - i
    den = 1
    for i in range(1, j + 1):
        den *= i
    assert binomial(m, j) * den == num


def test_j_closed_examples():
    assert j_closed(3, 3) == 7
    assert j_closed(3, 0) == 0
    assert j_closed(4, 4) == 37 == j_row(8)[4]
    with pytest.raises(IndexOutOfRange):
        j_closed(3, 7)


def test_i_closed_examples():
    assert i_closed(4, 1) == 4
    assert i_closed(5, 2) == 12
    assert i_closed(7, 3) == 92 == i_row(7)[3]
    with pytest.raises(IndexOutOfRange):
        i_closed(4, 4)


def test_s_sequence_examples():
    # 1 / ((1-u^2)(1-u)^2) = 1 + 2u + 4u^2 + 6u^3 + 9u^4 + ...
    assert s_sequence(SnParams(1, 1), 6) == [1, 2, 4, 6, 9, 12, 16]
    assert s_sequence(SnParams(0, 0), 5) == [1] * 6


def test_s_sequence_is_inner_sum_of_i_closed():
    # r = 2 instance: x = 3, y = 2; I_n(t)/(1-t)^(n+1) has t^2 coefficient s_n(2)
    s = s_sequence(SnParams(3, 2), 10)
    for n in range(1, 11):
        row = i_row(n).coeffs
        # t^2 coefficient of I_n(t) * (1-t)^-(n+1)
        expected = sum(row[j] * binomial(n + 2 - j, 2 - j) for j in range(min(3, n)))
        assert s[n] == expected


def test_s_recurrence_examples():
    p = SnParams(1, 1)
    assert s_recurrence_residual(p, s_sequence(p, 2), 0) == 4 * 1 + 2 * 2 - 2 * 4 == 0
    assert verify_s_recurrence(SnParams(0, 0), 30).ok
    assert verify_s_recurrence(SnParams(3, 2), 50).ok


@given(st.integers(-10, 10), st.integers(-10, 10))
def test_s_recurrence_random(x, y):
    report = verify_s_recurrence(SnParams(x, y), 40)
    assert report.ok and report.checked == 39


def test_s_recurrence_detects_wrong_sequence():
    p = SnParams(1, 1)
    s = s_sequence(p, 5)
    s[3] += 1
    assert s_recurrence_residual(p, s, 1) != 0


def test_explicit_examples():
    assert a_explicit(9, 4) == 20
    assert b_explicit(12, 6) == -65
    assert a_explicit(5, 2) == 2
    with pytest.raises(OddIndex):
        b_explicit(7, 2)
    with pytest.raises(IndexOutOfRange):
        a_explicit(5, 3)


@pytest.mark.parametrize("n", range(1, 61))
def test_explicit_matches_recurrence(n):
    assert tuple(a_explicit(n, k) for k in range((n - 1) // 2 + 1)) == a_row(n).gammas
    if n % 2 == 0:
        assert tuple(b_explicit(n, k) for k in range(1, n // 2 + 1)) == b_row(n).gammas


@pytest.mark.parametrize("n", range(1, 31))
def test_closed_rows_match_recurrence(n):
    assert tuple(i_closed(n, k) for k in range(n)) == i_row(n).coeffs
    if n % 2 == 0:
        assert tuple(j_closed(n // 2, k) for k in range(n)) == j_row(n).coeffs


def test_degree_in_n():
    assert [j_closed(n, 2) for n in range(2, 6)] == [1, 3, 6, 10]
    assert forward_differences([1, 3, 6, 10], 2) == [1, 1]
    for k in range(1, 7):
        assert j_degree_check(k)
