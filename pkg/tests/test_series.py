from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtorus.families import ElementBuilder, Family
from qtorus.scalars import ONE, Q_MINUS, qq
from qtorus.series import (
    SeriesDomainError,
    TruncatedSeries,
    build_theta_prime_series,
    build_theta_series,
    from_json,
    series_exp,
    series_geom,
    series_log,
    series_mul,
    series_poly_factor,
    to_json,
)
from qtorus.torus import ONE_ELEMENT, ZERO_ELEMENT, X, X_INV, Y, Y_INV, TorusElement, elem_pow

from strategies import laurent_scalars


def S(coeffs, order):
    return TruncatedSeries.from_coeffs(coeffs, order)


@st.composite
def diagonal_elements(draw, span=3):
    """Elements supported on x^k y^k; these pairwise commute."""
    ks = draw(st.lists(st.integers(-span, span), max_size=3))
    return TorusElement({(k, k): draw(laurent_scalars(max_terms=2, span=4)) for k in ks})


@st.composite
def commuting_series(draw, constant_one=False, max_order=12):
    order = draw(st.integers(1, max_order))
    cs = [draw(diagonal_elements()) for _ in range(order + 1)]
    cs[0] = ONE_ELEMENT if constant_one else ZERO_ELEMENT
    return TruncatedSeries(order, tuple(cs))


def test_mul_examples():
    a = S([ONE_ELEMENT, X], 2)
    assert series_mul(a, S([ONE_ELEMENT], 2)) == a
    assert series_mul(S([ONE_ELEMENT, X], 1), S([ONE_ELEMENT, Y], 1)) == S([ONE_ELEMENT, X + Y], 1)
    assert series_mul(a, S([ONE_ELEMENT, Y], 2)) == S([ONE_ELEMENT, X + Y, X * Y], 2)
    with pytest.raises(ValueError):
        series_mul(S([], 1), S([], 2))


def test_geom_examples():
    xy = X * Y
    assert series_geom(xy, 2) == S([ONE_ELEMENT, xy, TorusElement.monomial(2, 2, qq(-2))], 2)
    assert series_geom(Y_INV * X_INV, 1)[1] == TorusElement.monomial(-1, -1, qq(-2))
    with pytest.raises(ValueError):
        series_geom(X + Y, 3)


def test_exp_examples():
    assert series_exp(S([], 4)) == S([ONE_ELEMENT], 4)
    e = series_exp(S([ZERO_ELEMENT, X], 2))
    assert e == S([ONE_ELEMENT, X, (X * X).scale(Fraction(1, 2))], 2)
    with pytest.raises(SeriesDomainError):
        series_exp(S([ONE_ELEMENT], 2))
    with pytest.raises(SeriesDomainError):
        series_exp(S([ZERO_ELEMENT, X, Y], 2))


def test_log_examples():
    assert series_log(S([ONE_ELEMENT], 5)) == S([], 5)
    xy = X * Y
    lg = series_log(series_geom(xy, 6))
    for n in range(1, 7):
        assert lg[n] == elem_pow(xy, n).scale(Fraction(1, n))
    with pytest.raises(SeriesDomainError):
        series_log(S([X], 3))
    with pytest.raises(SeriesDomainError):
        series_log(S([ONE_ELEMENT, X, Y], 2))


def test_poly_factor():
    assert series_poly_factor(S([ONE_ELEMENT], 3), qq(2), 2) == S(
        [ONE_ELEMENT, ZERO_ELEMENT, TorusElement.scalar(-qq(2))], 3
    )
    with pytest.raises(ValueError):
        series_poly_factor(S([ONE_ELEMENT], 3), ONE, 3)


def test_theta_series_low_coefficients():
    b = ElementBuilder()
    tp, th = build_theta_prime_series(4), build_theta_series(4)
    assert tp[0] == ONE_ELEMENT and th[0] == ONE_ELEMENT
    assert tp[1] == b.build(Family.THETA_PRIME, 1, "closed").scale(Q_MINUS)
    assert tp[2] == b.build(Family.THETA_PRIME, 2, "closed").scale(Q_MINUS)
    assert th[1] == b.build(Family.THETA, 1, "closed").scale(Q_MINUS)
    assert th[1] == tp[1]


def test_theta_ratio_cleared_order_16():
    tp, th = build_theta_prime_series(16), build_theta_series(16)
    assert series_poly_factor(th, qq(-2), 2) == series_poly_factor(tp, ONE, 2)


def test_h_difference_from_log_of_ratio():
    # log((1 - t^2)/(1 - q^-2 t^2)) at t^2 is q^-2 - 1
    b = ElementBuilder()
    diff = b.build(Family.H, 2, "series") - b.build(Family.H_PRIME, 2, "series")
    assert diff == TorusElement.scalar((qq(-2) - 1) / Q_MINUS)


def test_orders_and_json():
    a = build_theta_prime_series(3)
    assert from_json(to_json(a)) == a
    assert a.truncate(2).order == 2
    with pytest.raises(ValueError):
        a.truncate(5)
    with pytest.raises(ValueError):
        TruncatedSeries(2, (ONE_ELEMENT,))


@given(commuting_series(constant_one=True, max_order=8))
def test_exp_log_roundtrip(a):
    assert series_exp(series_log(a)) == a


@given(commuting_series(max_order=8))
def test_log_exp_roundtrip(a):
    assert series_log(series_exp(a)) == a


@given(commuting_series(max_order=6), commuting_series(max_order=6))
def test_exp_is_additive_on_commuting(a, b):
    n = min(a.order, b.order)
    a, b = a.truncate(n), b.truncate(n)
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


@given(commuting_series(max_order=6), laurent_scalars())
def test_scalar_series_commute(a, c):
    s = S([TorusElement.scalar(c)], a.order)
    assert series_mul(a, s) == series_mul(s, a)
