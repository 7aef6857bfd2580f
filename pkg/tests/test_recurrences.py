import pytest

from inveul.errors import DivisibilityViolation, OddIndex
from inveul.polyseq import gamma_expand, is_symmetric, is_unimodal
from inveul.recurrences import (
    TriangleCache,
    a_row,
    b_row,
    double_factorial_odd,
    i_row,
    i_step,
    j_row,
    telephone,
)

from brute import naive_descent_rows


@pytest.mark.parametrize(
    "n, expected",
    [
        (4, (0, 1, 1, 1)),
        (6, (0, 1, 3, 7, 3, 1)),
        (8, (0, 1, 6, 27, 37, 27, 6, 1)),
    ],
)
def test_j_rows(n, expected):
    assert j_row(n).coeffs == expected


@pytest.mark.parametrize(
    "n, expected",
    [
        (4, (1, 4, 4, 1)),
        (6, (1, 9, 28, 28, 9, 1)),
        (7, (1, 12, 57, 92, 57, 12, 1)),
    ],
)
def test_i_rows(n, expected):
    assert i_row(n).coeffs == expected


@pytest.mark.parametrize("n", [7, 8])
def test_rows_match_naive_enumeration(n):
    i_expected, j_expected = naive_descent_rows(n)
    assert i_row(n).coeffs == i_expected
    assert j_row(n, allow_odd=True).coeffs == j_expected


@pytest.mark.parametrize(
    "n, expected",
    [
        (5, (1, 2, 2)),
        (7, (1, 6, 18, 0)),
        (13, (1, 30, 579, 3626, 8360, 4800, 440)),
    ],
)
def test_a_rows(n, expected):
    assert a_row(n).gammas == expected


@pytest.mark.parametrize(
    "n, expected",
    [
        (8, (1, 0, 12, -7)),
        (10, (1, 2, 36, -10, 25)),
        (18, (1, 20, 728, 7902, 50165, 122571, 135545, 33188, 4417)),
    ],
)
def test_b_rows(n, expected):
    assert b_row(n).gammas == expected


def test_odd_index_errors():
    with pytest.raises(OddIndex):
        j_row(5)
    with pytest.raises(OddIndex):
        b_row(7)
    assert j_row(5, allow_odd=True).coeffs == (0,) * 5


def test_divisibility_violation_on_corrupt_input():
    with pytest.raises(DivisibilityViolation) as info:
        i_step(3, (1, 2), (1,))
    assert info.value.n == 3 and info.value.divisor == 3


def test_corrupt_base_is_detected_downstream():
    cache = TriangleCache("I", base={1: (1,), 2: (1, 2)})
    with pytest.raises(DivisibilityViolation):
        cache.get(12)


def test_telephone_and_double_factorial():
    assert [telephone(n) for n in range(8)] == [1, 1, 2, 4, 10, 26, 76, 232]
    assert telephone(10) == 9496
    assert [double_factorial_odd(n) for n in (2, 4, 6, 8)] == [1, 3, 15, 105]
    assert double_factorial_odd(5) == 0


def test_row_sum_recurrences():
    for n in range(3, 201):
        assert i_row(n).total() == i_row(n - 1).total() + (n - 1) * i_row(n - 2).total()
    for n in range(4, 201, 2):
        assert j_row(n).total() == (n - 1) * j_row(n - 2).total()


def test_symmetry_and_unimodality_to_200():
    for n in range(1, 201):
        row = i_row(n)
        assert is_symmetric(row) and is_unimodal(row)
        if n % 2 == 0:
            row = j_row(n)
            assert is_symmetric(row) and is_unimodal(row)


@pytest.mark.parametrize("n", range(1, 61))
def test_gamma_rows_agree_with_peeling(n):
    assert gamma_expand(i_row(n)) == a_row(n)
    if n % 2 == 0:
        assert gamma_expand(j_row(n)) == b_row(n)


def test_cache_seed_rejects_bad_rows(fresh_caches):
    cache = fresh_caches["J"]
    good = {4: j_row(4).coeffs, 6: (0, 1, 3, 8, 3, 1), 8: j_row(8).coeffs}
    assert cache.seed(good) == 1
    assert cache.max_n == 4


def test_cache_is_independent(fresh_caches):
    cache = fresh_caches["A"]
    assert cache.get(16) == a_row(16).gammas
    assert cache.max_n == 16
    with pytest.raises(OddIndex):
        fresh_caches["B"].get(9)
