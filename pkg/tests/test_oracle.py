import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from recipbinom.exact import SumParams, binomial
from recipbinom.oracle import (
    SumPolynomial,
    apply_x_ddx,
    direct_lifted,
    direct_parametric,
    direct_sum,
    direct_weighted,
    polynomial_coeffs,
)

F = Fraction


@pytest.mark.parametrize(
    "n, b, c, expected",
    [(0, 4, 2, F(1, 6)), (1, 2, 1, F(1, 6)), (2, 3, 2, F(1, 10))],
)
def test_direct_sum_examples(n, b, c, expected):
    assert direct_sum(SumParams(n, b, c)) == expected


def test_direct_parametric_examples():
    for n, b, c in [(0, 4, 2), (3, 5, 2), (6, 6, 6)]:
        assert direct_parametric(SumParams(n, b, c), 0) == F(1, binomial(b, c))
    assert direct_parametric(SumParams(1, 2, 1), F(1, 2)) == F(1, 3)
    assert direct_parametric(SumParams(2, 3, 2), 1) == F(1, 10)


def test_direct_weighted_examples():
    p = SumParams(3, 5, 2)
    for x in (F(1), F(-2, 3)):
        assert direct_weighted(p, x, 0) == direct_parametric(p, x)
    assert direct_weighted(SumParams(1, 2, 1), 1, 1) == F(-1, 3)
    assert direct_weighted(SumParams(1, 2, 1), F(1, 2), 1) == F(-1, 6)


def test_direct_lifted_examples():
    p = SumParams(3, 5, 2)
    assert direct_lifted(p, F(3, 7), 0) == direct_parametric(p, F(3, 7))
    assert direct_lifted(SumParams(1, 2, 1), 1, 1) == F(1, 3)
    assert direct_lifted(SumParams(2, 3, 2), 1, 1) == F(1, 5)


def test_polynomial_coeffs_examples():
    assert polynomial_coeffs(SumParams(0, 4, 2)).coefficients == (F(1, 6),)
    assert polynomial_coeffs(SumParams(1, 2, 1)).coefficients == (F(1, 2), F(-1, 3))
    assert polynomial_coeffs(SumParams(2, 3, 2)).coefficients == (F(1, 3), F(-1, 3), F(1, 10))


def test_polynomial_shape():
    for n in range(8):
        poly = polynomial_coeffs(SumParams(n, 9, 4))
        assert len(poly) == n + 1
        assert poly.coefficients[0] > 0
        for k, a in enumerate(poly.coefficients):
            assert (a > 0) == (k % 2 == 0)


def test_apply_x_ddx_examples():
    poly = SumPolynomial((F(1, 2), F(-1, 3)))
    assert apply_x_ddx(poly, 0) == poly
    assert apply_x_ddx(poly, 1).coefficients == (0, F(-1, 3))
    assert apply_x_ddx([F(1, 3), F(-1, 3), F(1, 10)], 2).coefficients == (0, F(-1, 3), F(2, 5))


def test_negative_orders_rejected():
    p = SumParams(1, 2, 1)
    for fn in (direct_weighted, direct_lifted):
        with pytest.raises(ValueError):
            fn(p, 1, -1)
    with pytest.raises(ValueError):
        apply_x_ddx(polynomial_coeffs(p), -1)


def test_operator_matches_weighted_definition():
    rng = random.Random(2024)
    xs = [F(rng.randint(-100, 100), rng.randint(1, 50)) for _ in range(40)]
    xs = [x for x in xs if -2 <= x <= 2][:20]
    assert len(xs) == 20
    for n in range(11):
        for b in range(1, 13):
            for c in range(1, b + 1):
                p = SumParams(n, b, c)
                poly = polynomial_coeffs(p)
                for m in range(5):
                    weighted = apply_x_ddx(poly, m)
                    for x in xs:
                        assert weighted(x) == direct_weighted(p, x, m)


small_rational = st.fractions(min_value=-3, max_value=3, max_denominator=30)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 15), small_rational)
def test_classical_binomial_identities(n, y):
    plain = sum((F((-1) ** k * binomial(n, k)) * y**k for k in range(n + 1)), F(0))
    weighted = sum((F(k * (-1) ** k * binomial(n, k)) * y**k for k in range(n + 1)), F(0))
    assert plain == (1 - y) ** n
    assert weighted == (-n * y * (1 - y) ** (n - 1) if n else 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12), st.integers(1, 12), st.integers(1, 12), small_rational, st.integers(0, 3))
def test_lift_step_divides_each_term(n, b, c, x, m):
    if c > b:
        b, c = c, b
    p = SumParams(n, b, c)
    poly = polynomial_coeffs(p)
    lifted_m = [a * x**k / (k + 1) ** m for k, a in enumerate(poly.coefficients)]
    lifted_next = [t / (k + 1) for k, t in enumerate(lifted_m)]
    assert sum(lifted_m, F(0)) == direct_lifted(p, x, m)
    assert sum(lifted_next, F(0)) == direct_lifted(p, x, m + 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12), st.integers(1, 12), st.integers(1, 12), small_rational)
def test_polynomial_evaluates_to_parametric_sum(n, b, c, x):
    if c > b:
        b, c = c, b
    p = SumParams(n, b, c)
    assert polynomial_coeffs(p)(x) == direct_parametric(p, x)
