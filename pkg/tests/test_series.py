"""Exact polynomial arithmetic, the joint series, and its closed forms."""

import math

import pytest

from cyclepat import series
from cyclepat.series import WEIGHTS1, WEIGHTS_MARKED, MultiPoly


def test_multipoly_ring_operations():
    q = MultiPoly.variable("q")
    x = MultiPoly.variable("x")
    assert (1 + q) * (1 + x) == 1 + q + x + q * x
    assert (1 + q) ** 3 == 1 + 3 * q + 3 * q * q + q**3
    assert q - q == MultiPoly.zero()
    assert (2 * x) * 0 == MultiPoly.zero()


def test_multipoly_truncates_to_bounds():
    bounds = (2, None, None, 3)
    q = MultiPoly.variable("q", bounds=bounds)
    t = MultiPoly.variable("t", bounds=bounds)
    assert (q**2) * q == MultiPoly.zero(bounds)
    assert (t**3) * t == MultiPoly.zero(bounds)
    assert (q * t) ** 2 == MultiPoly.monomial({"q": 2, "t": 2}, bounds=bounds)


def test_multipoly_inverse_is_a_geometric_series():
    bounds = (0, 0, 0, 8)
    one = MultiPoly.const(1, bounds)
    t = MultiPoly.variable("t", bounds=bounds)
    geometric = (one - t).inverse()
    assert all(geometric.coeff(t=n) == 1 for n in range(9))
    assert (one - t) * geometric == one


def test_multipoly_text_and_sorted_terms():
    poly = MultiPoly({(0, 0, 0, 0): 6, (0, 1, 0, 0): 11, (0, 2, 0, 0): 6, (0, 3, 0, 0): 1})
    assert poly.to_text() == "6 + 11*x + 6*x^2 + x^3"
    degrees = [sum(key) for key, _ in poly.sorted_terms()]
    assert degrees == sorted(degrees)


def test_catalan_series_functional_equation():
    bounds = (0, 0, 0, 10)
    c = series.catalan_series(10, bounds)
    one = MultiPoly.const(1, bounds)
    t = MultiPoly.variable("t", bounds=bounds)
    assert c == one + t * c * c
    assert [c.coeff(t=n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert all(c.coeff(t=n) == series.catalan_number(n) for n in range(11))


def test_stirling_numbers():
    for n in range(1, 9):
        assert sum(series.stirling_unsigned(n, k) for k in range(n + 1)) == math.factorial(n)
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert series.stirling_unsigned(n + 1, k) == series.stirling_unsigned(
                n, k - 1
            ) + n * series.stirling_unsigned(n, k)
    assert series.stirling_unsigned(4, 2) == 11


def test_brackets():
    assert series.bracket(1, "plain") == MultiPoly.const(1)
    assert series.bracket(3, "plain").to_text() == "1 + q + q^2"


def test_expansion_t3_distribution():
    row = series.expand_f(3, x=1, y=1).coefficient_poly("t", 3)
    assert {key[0]: coeff for key, coeff in row.terms.items()} == {0: 14, 1: 8, 2: 2}


def test_expansion_stirling_slice():
    f = series.expand_f(6, q=1, y=1)
    for n in range(7):
        for j in range(n + 2):
            assert f.coeff(x=j, t=n) == series.stirling_unsigned(n + 1, j + 1)


def test_transfer_matrix_reproduces_series_rows():
    f = series.expand_f(5)
    f_at_y1 = series.expand_f(5, y=1)
    for n in range(6):
        assert series.motzkin_transfer(n, WEIGHTS_MARKED) == f.coefficient_poly("t", n)
        assert series.motzkin_transfer(n, WEIGHTS1) == f_at_y1.coefficient_poly("t", n)


def test_transfer_matrix_matches_brute_path_sums():
    from cyclepat import paths

    for scheme in series.SCHEMES.values():
        for n in range(5):
            brute = MultiPoly.zero()
            for path in paths.enumerate_motzkin_paths(n):
                brute = brute + paths.path_weight(path, scheme)
            assert brute == series.motzkin_transfer(n, scheme)


def test_q_slices_against_expansion():
    f = series.expand_f(9, 2, y=1)
    for k in range(3):
        assert series.q_slice_closed(k, 9) == f.coefficient_poly("q", k)


def test_coefficient_formula_anchors():
    assert all(series.coeff_closed(0, 0, n) == series.catalan_number(n) for n in range(9))
    assert series.coeff_closed(0, 1, 2) == 2
    assert series.coeff_closed(1, 1, 2) == 1
    assert series.coeff_closed(1, 0, 3) == 1
    assert series.coeff_closed(2, 3, 2) == 0  # m > n
    f = series.expand_f(8, 2, y=1)
    for i in range(3):
        for n in range(9):
            for m in range(n + 1):
                assert series.coeff_closed(i, m, n) == f.coeff(q=i, x=m, t=n)


def test_truncation_depth_covers_slices_below_it():
    f = series.expand_f(8, 3, y=1)
    for k in range(1, 4):
        trunc = series.truncated_cf(series.pattern_truncation(k), 8, q_max=3)
        for i in range(k):
            assert trunc.coefficient_poly("q", i) == f.coefficient_poly("q", i)


def test_truncation_misses_its_own_depth_slice():
    f = series.expand_f(4, 1, y=1)
    trunc = series.truncated_cf(series.pattern_truncation(1), 4, q_max=1)
    mine = trunc.coefficient_poly("q", 1).specialize(x=1)
    full = f.coefficient_poly("q", 1).specialize(x=1)
    assert mine.coeff(t=3) == 6 and full.coeff(t=3) == 8


def test_marked_identity_small():
    assert series.marked_identity_check(6, 5) == []
