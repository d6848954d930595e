# Tests/test_series_ring.py
import pytest

from Core.errors import BudgetError, MalformedInputError, SingularSeriesError
from Core.pbw_engine import AlgebraContext
from Core.series_ring import (
    BivariateSeries,
    SeriesMatrix,
    TruncatedSeries,
    falling_product,
    rising_product,
    series_arith,
    series_inverse,
    shift_argument,
)

Y1 = AlgebraContext(1, 5)
Y2 = AlgebraContext(2, 3)


def test_inverse_of_single_series():
    f = TruncatedSeries.rtt(Y1, 1, 1, 3)
    g = f.inverse()
    t1, t2 = Y1.gen(1, 1, 1), Y1.gen(1, 1, 2)
    assert g.coeff(1) == -t1
    assert g.coeff(2) == t1 * t1 - t2
    assert f * g == TruncatedSeries.constant(Y1, 1, 3)


def test_inverse_needs_unit_constant():
    with pytest.raises(SingularSeriesError):
        series_inverse(TruncatedSeries.zero(Y1, 2))


def test_matrix_inverse_is_two_sided():
    T = SeriesMatrix.rtt(Y2, 3)
    inv = T.inverse()
    identity = SeriesMatrix.identity(Y2, 2, 3)
    assert T @ inv == identity
    assert inv @ T == identity


def test_shift_argument_composes_and_cancels():
    f = TruncatedSeries.rtt(Y2, 1, 2, 4)
    assert shift_argument(shift_argument(f, 2), -2) == f
    assert shift_argument(f, 1).shift(1) == f.shift(2)
    # (u + 1)^{-1} = u^{-1} - u^{-2} + ...
    g = shift_argument(f, 1)
    assert g.coeff(1) == Y2.gen(1, 2, 1)
    assert g.coeff(2) == Y2.gen(1, 2, 2) - Y2.gen(1, 2, 1)


def test_shift_by_p_is_identity_on_coefficients():
    f = TruncatedSeries.rtt(Y2, 2, 1, 4)
    assert shift_argument(f, Y2.p) == f


def test_sign_twist_is_an_involution():
    f = TruncatedSeries.rtt(Y2, 1, 1, 4)
    assert f.sign_twist().sign_twist() == f
    assert f.sign_twist().coeff(3) == -Y2.gen(1, 1, 3)


def test_falling_and_rising_products():
    f = TruncatedSeries.rtt(Y1, 1, 1, 3)
    assert falling_product(f, 0) == TruncatedSeries.constant(Y1, 1, 3)
    assert falling_product(f, 2) == f * f.shift(-1)
    assert rising_product(f, 2) == f * f.shift(1)
    assert falling_product(f, 3).shift(2) == rising_product(f, 3)


def test_series_arith_dispatch():
    f = TruncatedSeries.rtt(Y1, 1, 1, 2)
    assert series_arith("add", f, f) == f * 2
    assert series_arith("scalarMul", f, 3) == f + f + f
    with pytest.raises(MalformedInputError):
        series_arith("pow", f, f)


def test_mismatched_orders_are_rejected():
    with pytest.raises(MalformedInputError):
        TruncatedSeries.rtt(Y1, 1, 1, 2) + TruncatedSeries.rtt(Y1, 1, 1, 3)


def test_coefficient_past_truncation_is_a_budget_error():
    f = TruncatedSeries.rtt(Y1, 1, 1, 2)
    with pytest.raises(BudgetError):
        f.coeff(3)
    with pytest.raises(BudgetError):
        BivariateSeries.in_u(f, 3)


def test_u_minus_v_clears_difference_quotient():
    """(u - v) sum a^{(r+s-1)} u^{-r} v^{-s} = a(v) - a(u)."""
    order = 5
    a = TruncatedSeries.rtt(Y2, 1, 2, order)
    x = BivariateSeries(
        Y2,
        {(r, s): a.coeff(r + s - 1) for r in range(1, order) for s in range(1, order - r + 1)},
        order,
    )
    product, boundary = x.times_u_minus_v()
    assert boundary == {}
    assert product == BivariateSeries.in_v(a, order - 1) - BivariateSeries.in_u(a, order - 1)


def test_u_minus_v_reports_positive_powers():
    a = TruncatedSeries.rtt(Y1, 1, 1, 2)
    product, boundary = BivariateSeries.in_u(a, 2).times_u_minus_v()
    assert boundary[("u", 0)] == Y1.unit()
    assert boundary[("v", 0)] == -Y1.unit()
    assert boundary[("v", 1)] == -Y1.gen(1, 1, 1)
    assert product.coeff(0, 0) == Y1.gen(1, 1, 1)


def test_bivariate_commutator_of_rtt_entries():
    order = 3
    t12 = BivariateSeries.in_u(TruncatedSeries.rtt(Y2, 1, 2, order), order)
    t21 = BivariateSeries.in_v(TruncatedSeries.rtt(Y2, 2, 1, order), order)
    bracket = t12.commutator(t21)
    assert bracket.coeff(1, 1) == Y2.gen(1, 1, 1) - Y2.gen(2, 2, 1)
    assert bracket.first_difference(bracket) is None
