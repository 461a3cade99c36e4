from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from recipbinom.exact import (
    InvalidParameters,
    SumParams,
    beta_int,
    binomial,
    factorial,
    format_rational,
    inverse_binomial_via_beta,
    parse_rational,
    pochhammer,
)


def product_factorial(n):
    acc = 1
    for j in range(2, n + 1):
        acc *= j
    return acc


def pascal_rows(size):
    rows = [[1]]
    for n in range(1, size + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


PASCAL = pascal_rows(60)


def beta_by_expansion(m, n):
    # integrate t^m (1-t)^n after expanding (1-t)^n
    return sum(Fraction((-1) ** j * PASCAL[n][j], m + j + 1) for j in range(n + 1))


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (10, 3628800)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected == product_factorial(n)


def test_factorial_matches_repeated_product():
    for n in range(60):
        assert factorial(n) == product_factorial(n)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n, k, expected", [(7, 0, 1), (5, 2, 10), (4, 2, 6), (4, 5, 0), (4, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal_triangle():
    for n, row in enumerate(PASCAL):
        assert [binomial(n, k) for k in range(n + 1)] == row
        assert binomial(n, n + 1) == 0


def test_pascal_identity():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_pochhammer_examples():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(1, 3) / pochhammer(2, 3) == Fraction(1, 4)
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_harmonic_pochhammer_ratio():
    for k in range(51):
        assert pochhammer(1, k) / pochhammer(2, k) == Fraction(1, k + 1)


@pytest.mark.parametrize("m, n, expected", [(0, 0, 1), (1, 2, Fraction(1, 12)), (2, 2, Fraction(1, 30))])
def test_beta_int_examples(m, n, expected):
    assert beta_int(m, n) == expected


def test_beta_int_against_polynomial_integration():
    for m in range(12):
        for n in range(12):
            assert beta_int(m, n) == beta_by_expansion(m, n)


def test_beta_factorial_identity():
    for m in range(41):
        for n in range(41):
            assert beta_int(m, n) * factorial(m + n + 1) == factorial(m) * factorial(n)


@pytest.mark.parametrize(
    "b, c, k, expected",
    [(4, 4, 0, Fraction(1)), (2, 1, 0, Fraction(1, 2)), (3, 2, 1, Fraction(1, 6))],
)
def test_inverse_binomial_examples(b, c, k, expected):
    assert inverse_binomial_via_beta(b, c, k) == expected


def test_inverse_binomial_is_reciprocal():
    for b in range(1, 13):
        for c in range(1, b + 1):
            for k in range(13):
                assert inverse_binomial_via_beta(b, c, k) * PASCAL[b + k][c] == 1


def test_inverse_binomial_validates():
    with pytest.raises(InvalidParameters):
        inverse_binomial_via_beta(1, 2, 0)
    with pytest.raises(InvalidParameters):
        inverse_binomial_via_beta(3, 1, -1)


@pytest.mark.parametrize(
    "n, b, c, message",
    [(-1, 2, 1, "n >= 0"), (1, 2, 0, "c > 0"), (1, 1, 2, "b >= c"), (1, 2.0, 1, "integer")],
)
def test_sum_params_constraints(n, b, c, message):
    with pytest.raises(InvalidParameters, match=message):
        SumParams(n, b, c)


def test_parse_and_format_rational():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational(" 5 ") == 5
    assert format_rational(Fraction(3, -6)) == "-1/2"
    assert format_rational(Fraction(4)) == "4"
    for bad in ["1/0", "0.5", "a/b", "", "1//2"]:
        with pytest.raises(InvalidParameters):
            parse_rational(bad)


rationals = st.fractions(max_denominator=10**6)


@given(rationals, rationals, st.sampled_from(["+", "-", "*", "/"]))
def test_canonical_form_after_arithmetic(a, b, op):
    if op == "/" and b == 0:
        return
    r = {"+": a + b, "-": a - b, "*": a * b, "/": a / b if b else 0}[op]
    r = Fraction(r)
    assert r.denominator >= 1
    assert gcd(abs(r.numerator), r.denominator) == 1
    if r == 0:
        assert (r.numerator, r.denominator) == (0, 1)
    assert parse_rational(format_rational(r)) == r
