from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from indextrace.errors import InvalidDimension, LengthMismatch, SeriesOrderCapExceeded
from indextrace.genera import (
    AHAT,
    BUILTIN_GENERA,
    L_GENUS,
    ORDER_CAP_ENV,
    TODD,
    NilpotentPoly,
    TruncatedSeries,
    exp_twist,
    hattori_range,
    l_class_cpn,
    pontryagin_class_cpn,
    product_genus,
    series_ahat_half,
    series_l,
    series_todd,
    signature_cpn,
    twisted_ahat_cpn,
)
from oracles import (
    ahat_half_oracle,
    binomial_pontryagin,
    hilbert_polynomial_cpn,
    l_oracle,
    todd_oracle,
    twisted_ahat_sympy,
)


# -- series ------------------------------------------------------------------

def test_series_small_orders():
    assert series_ahat_half(0).coeffs == (1,)
    assert series_ahat_half(2).coeffs == (1, 0, Fraction(-1, 24))
    assert series_ahat_half(4)[4] == Fraction(7, 5760)
    assert series_l(0).coeffs == (1,)
    assert series_l(2).coeffs == (1, 0, Fraction(1, 3))
    assert series_l(4)[4] == Fraction(-1, 45)
    assert series_todd(1).coeffs == (1, Fraction(1, 2))
    assert series_todd(2)[2] == Fraction(1, 12)
    assert series_todd(4).coeffs == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))


@pytest.mark.parametrize("series,oracle", [(series_ahat_half, ahat_half_oracle),
                                           (series_l, l_oracle),
                                           (series_todd, todd_oracle)])
def test_series_against_sympy(series, oracle):
    assert list(series(14).coeffs) == oracle(14)


@pytest.mark.parametrize("order", range(0, 25))
def test_parity_and_todd_identity(order):
    a, l = series_ahat_half(order), series_l(order)
    assert all(a[k] == 0 and l[k] == 0 for k in range(1, order + 1, 2))
    assert series_todd(order) == a * TruncatedSeries.exp(Fraction(1, 2), order)


def test_order_cap_env(monkeypatch):
    monkeypatch.setenv(ORDER_CAP_ENV, "8")
    series_l(8)
    with pytest.raises(SeriesOrderCapExceeded):
        series_l(9)
    with pytest.raises(SeriesOrderCapExceeded):
        twisted_ahat_cpn(9, 0)


series_st = st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=8), min_size=6, max_size=6)


@given(series_st, series_st, series_st)
def test_series_ring_axioms(a, b, c):
    a, b, c = TruncatedSeries(a), TruncatedSeries(b), TruncatedSeries(c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_st)
def test_series_inverse(a):
    if a[0] == 0:
        a = [1, *a[1:]]
    s = TruncatedSeries(a)
    assert s * s.inverse() == TruncatedSeries.constant(1, s.order)


def test_compose_exp_log():
    n = 10
    # log(1+x)
    log1p = TruncatedSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)])
    exp = TruncatedSeries.exp(1, n)
    assert exp.compose(log1p) == TruncatedSeries([1, 1] + [0] * (n - 1))
    with pytest.raises(ValueError):
        exp.compose(exp)


def test_series_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1]).inverse()


# -- nilpotent ring ----------------------------------------------------------

def test_nilpotent_truncation():
    x = NilpotentPoly.variable((2,), 0)
    assert (x * x * x).terms == {}
    y = NilpotentPoly.variable((1, 2), 1)
    z = NilpotentPoly.variable((1, 2), 0)
    p = (z + y) ** 3
    assert p.top_coefficient() == 3          # coefficient of z*y^2
    assert p.coefficient((0, 3)) == 0
    with pytest.raises(LengthMismatch):
        x * y


# -- CP^n --------------------------------------------------------------------

def test_twisted_ahat_examples():
    assert twisted_ahat_cpn(2, 1) == 0
    assert twisted_ahat_cpn(1, 0) == 0
    assert twisted_ahat_cpn(2, 3) == 1
    with pytest.raises(InvalidDimension):
        twisted_ahat_cpn(0, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_twisted_ahat_matches_riemann_roch(n):
    # e^{kx/2} A-hat = e^{(k-n-1)x/2} Todd, so the value is chi(O((k-n-1)/2))
    for k in range(-2 * n - 3, 2 * n + 4):
        assert twisted_ahat_cpn(n, k) == hilbert_polynomial_cpn(n, Fraction(k - n - 1, 2))


@pytest.mark.parametrize("n,k", [(1, 0), (2, 1), (3, 2), (4, -3), (4, 5), (5, 6), (6, 0)])
def test_twisted_ahat_matches_sympy(n, k):
    assert twisted_ahat_cpn(n, k) == twisted_ahat_sympy(n, k)


@pytest.mark.parametrize("n", range(1, 11))
def test_hattori_vanishing_and_boundary(n):
    for k in hattori_range(n):
        assert twisted_ahat_cpn(n, k) == 0
    assert twisted_ahat_cpn(n, n + 1) == 1
    assert twisted_ahat_cpn(n, -(n + 1)) == (-1) ** n


@pytest.mark.parametrize("n", range(1, 11))
def test_spinc_integrality(n):
    for k in range(-2 * n - 2, 2 * n + 3):
        if (k - n - 1) % 2 == 0:
            assert twisted_ahat_cpn(n, k).denominator == 1


def test_hattori_range():
    assert hattori_range(1) == [0]
    assert hattori_range(2) == [-1, 1]
    assert hattori_range(3) == [-2, 0, 2]


def test_signature():
    assert [signature_cpn(n) for n in range(1, 11)] == [0, 1] * 5
    for n in range(1, 11):
        assert signature_cpn(n) == l_class_cpn(n).top_coefficient()
    with pytest.raises(InvalidDimension):
        signature_cpn(0)


def test_pontryagin():
    assert pontryagin_class_cpn(2).univariate_coeffs() == [1, 0, 3]
    assert pontryagin_class_cpn(1).univariate_coeffs() == [1, 0]
    assert pontryagin_class_cpn(4).univariate_coeffs() == [1, 0, 5, 0, 10]
    for n in range(1, 9):
        assert pontryagin_class_cpn(n).univariate_coeffs() == binomial_pontryagin(n)


def test_l_class():
    assert l_class_cpn(1).univariate_coeffs() == [1, 0]
    assert l_class_cpn(2).univariate_coeffs() == [1, 0, 1]
    assert l_class_cpn(3).univariate_coeffs() == [1, 0, Fraction(4, 3), 0]


def test_product_genus_examples():
    assert product_genus(L_GENUS, [2, 2], [0, 0]) == 1
    assert product_genus(AHAT, [2], [1]) == 0
    for spec in (AHAT, L_GENUS):
        assert product_genus(spec, [1], [0]) == 0
    assert product_genus(TODD, [3, 2], [0, 0]) == 1
    with pytest.raises(LengthMismatch):
        product_genus(AHAT, [2, 2], [0])
    with pytest.raises(InvalidDimension):
        product_genus(AHAT, [0], [0])
    with pytest.raises(InvalidDimension):
        product_genus(AHAT, [], [])


@pytest.mark.parametrize("spec", BUILTIN_GENERA, ids=lambda s: s.name)
def test_multiplicativity(spec):
    for m in range(1, 6):
        for n in range(1, 6):
            assert product_genus(spec, [m, n], [0, 0]) == \
                product_genus(spec, [m], [0]) * product_genus(spec, [n], [0])


def test_twisted_product_is_product_of_twisted():
    assert product_genus(AHAT, [2, 3], [3, 2]) == twisted_ahat_cpn(2, 3) * twisted_ahat_cpn(3, 2)
    assert product_genus(AHAT, [3, 1], [6, 4]) == twisted_ahat_cpn(3, 6) * twisted_ahat_cpn(1, 4)


def test_exp_twist_convention():
    # a twist written as e^{kx} is exp_twist(2k)
    for n in range(1, 6):
        for k in range(-3, 4):
            assert product_genus(exp_twist(k), [n], [0]) == twisted_ahat_cpn(n, k)
            assert product_genus(exp_twist(2 * k), [n], [0]) == twisted_ahat_cpn(n, 2 * k)
    assert product_genus(exp_twist(3), [2], [0]) == product_genus(TODD, [2], [0])
