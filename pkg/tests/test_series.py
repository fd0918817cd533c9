from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from torsorcount.ff_poly import DivisorP1, closed_points, field_of_size
from torsorcount.series import (
    F_nu_direct,
    F_tilde_closed,
    F_tilde_product,
    TruncSeries,
    effective_divisor_count,
    gcd_sum_brute,
    gcd_sum_euler,
    main_term_residue,
    pole_limit,
    tauber_fit,
    zeta_p1,
)


def test_zeta_coefficients_over_f2():
    Z = zeta_p1(2, 4)
    assert [Z[(k,)] for k in range(5)] == [1, 3, 7, 15, 31]


def test_zeta_coefficient_over_f3():
    assert zeta_p1(3, 2)[(2,)] == 13
    assert effective_divisor_count(3, 2) == 13


def test_F_nu_direct_examples():
    S = F_nu_direct((0, 0), 2, 2)
    assert S[(0, 0)] == 1 and S[(1, 2)] == 2 and S[(2, 2)] == 4
    S = F_nu_direct((1, 0), Fraction(1, 3), 1)
    assert S[(0, 0)] == 1 and S[(1, 1)] == Fraction(1, 3)


def test_F_nu_shift_law():
    for nu in itertools.product(range(3), repeat=3):
        shifted = tuple(v + 1 for v in nu)
        lhs = F_nu_direct(shifted, 3, 3)
        rhs = F_nu_direct(nu, 3, 3)
        assert all(lhs[idx] == 3 * rhs[idx] for idx in itertools.product(range(4), repeat=3))


@pytest.mark.parametrize("rho", [2, 3, Fraction(1, 2)])
def test_F_tilde_zero_shift_is_one_minus_product(rho):
    poly = F_tilde_closed((0, 0, 0), rho)
    for idx in itertools.product(range(poly.orders[0] + 1), repeat=3):
        expected = {(0, 0, 0): 1, (1, 1, 1): -1}.get(idx, 0)
        assert poly[idx] == expected


@pytest.mark.parametrize("nu", [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 1), (2, 2, 2), (0, 2, 1)])
@pytest.mark.parametrize("rho", [2, 3, 4])
def test_F_tilde_closed_matches_product(nu, rho):
    closed = F_tilde_closed(nu, rho)
    # truncating well past the polynomial degree shows the product has no further terms
    product = F_tilde_product(nu, rho, max(nu) + 3)
    for idx, c in product.terms():
        if all(i <= closed.orders[0] for i in idx):
            assert c == closed[idx]
        else:
            assert c == 0


F2 = field_of_size(2)
PTS = closed_points(F2, 2)


def test_gcd_sum_small_examples():
    zero = DivisorP1()
    assert gcd_sum_brute(F2, [zero, zero], (0, 0)) == 1
    # three points of degree one: equal pairs give 2, distinct pairs 1
    assert gcd_sum_brute(F2, [zero, zero], (1, 1)) == 3 * 2 + 6 * 1
    # one divisor: every G contributes q^deg G
    assert gcd_sum_brute(F2, [zero], (2,)) == 7 * 4


@pytest.mark.parametrize("d", [(1, 1), (2, 1), (2, 2), (1, 3), (0, 2), (3,)])
def test_gcd_sum_euler_matches_brute(d):
    P = PTS[1][0]
    Q = PTS[2][0]
    for D in ([DivisorP1()] * len(d), [DivisorP1({P: 1})] * len(d), [DivisorP1({Q: 1}), DivisorP1({P: 2})][:len(d)]):
        assert gcd_sum_euler(F2, D, d, cutoff=sum(d)) == gcd_sum_brute(F2, D, d)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_main_term_residue_closed_form(q):
    # at T = 1/q the vanishing factors are 1 - q^3 T^3 (limit 3) and three copies of 1 - q^2 T^2 (limit 2)
    assert main_term_residue(q) == Fraction(q, q - 1) ** 4 / 24


def test_main_term_residue_q2():
    assert main_term_residue(2) == Fraction(2, 3)


def test_pole_limit_simple_cases():
    assert pole_limit([(2, 1)], Fraction(1, 2), 1) == 1
    assert pole_limit([(2, 1), (1, 1)], Fraction(1, 2), 1) == 2
    assert pole_limit([(1, 1)], Fraction(1, 2), 1) == 0
    with pytest.raises(ValueError):
        pole_limit([(2, 1), (2, 1)], Fraction(1, 2), 1)


def test_tauber_fit_recovers_binomial_constant():
    coeffs = [math.comb(n + 3, 3) * 2 ** n for n in range(60)]
    assert tauber_fit(coeffs, 4, 2) == pytest.approx(1 / 6, rel=1e-3)


def test_tauber_fit_simple_pole_is_constant():
    coeffs = [5 * 3 ** n for n in range(20)]
    assert tauber_fit(coeffs, 1, 3) == pytest.approx(5)


def test_tauber_fit_constant_sequence_with_higher_order():
    coeffs = [7] * 200
    assert abs(tauber_fit(coeffs, 2, 1)) < 0.2


orders = (2, 2)
small_series = st.lists(st.integers(-3, 3), min_size=9, max_size=9).map(
    lambda v: TruncSeries.from_dict(orders, {idx: c for idx, c in zip(itertools.product(range(3), repeat=2), v)})
)


@given(small_series, small_series, small_series)
def test_truncated_series_ring_laws(a, b, c):
    one = TruncSeries.one(orders)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * one == a
    assert a - a == TruncSeries.zero(orders)


def test_series_evaluate_and_geometric():
    g = TruncSeries.geometric(2, 3)
    assert [g[(k,)] for k in range(4)] == [1, 2, 4, 8]
    assert g.evaluate([Fraction(1, 2)]) == 4
