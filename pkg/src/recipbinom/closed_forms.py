"""Closed-form and hypergeometric evaluations of the reciprocal binomial sums.

The parametric sum splits as ``S(x) = I1(x) - I2(x)`` with

    I1(x) = (b+1) B(b-c+1, c+1) 2F1(-n, b-c+1; b+2; x)
    I2(x) = n x B(b-c+2, c+1) 2F1(1-n, b-c+2; b+3; x)

where ``B(p, q) = (p-1)! (q-1)! / (p+q-1)!``. Weighted sums apply
``(x d/dx)^m`` to this pair and lifted sums integrate it over the unit cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import SumParams, as_rational, beta_int, binomial
from .hypergeom import HypSeries, derivative_shift, eval_terminating, lift_insert_harmonic

__all__ = [
    "Decomposition",
    "beta_decomposition",
    "eval_decomposition",
    "frisch",
    "lifted_closed",
    "lifted_series",
    "stirling2",
    "weighted_closed",
]


@dataclass(frozen=True)
class Decomposition:
    """``prefactor1 * series1(x) - prefactor2 * x * series2(x)``.

    ``series2`` is ``None`` when n = 0; its upper parameter ``1 - n`` would
    then be positive and the series would not terminate, but the factor n
    makes the whole term vanish anyway.
    """

    prefactor1: Fraction
    series1: HypSeries
    prefactor2: Fraction
    series2: HypSeries | None
    x_power2: int = 1

    def value(self, x: Fraction | int | str) -> Fraction:
        x = as_rational(x)
        total = self.prefactor1 * eval_terminating(self.series1.at(x))
        if self.series2 is not None and self.prefactor2:
            total -= self.prefactor2 * x**self.x_power2 * eval_terminating(self.series2.at(x))
        return total

    def to_json(self) -> dict:
        return {
            "prefactor1": str(self.prefactor1),
            "series1": self.series1.to_json(),
            "prefactor2": str(self.prefactor2),
            "series2": None if self.series2 is None else self.series2.to_json(),
            "x_power2": self.x_power2,
        }


def frisch(p: SumParams) -> Fraction:
    """``c / (n+c) / C(n+b, b-c)``."""
    return Fraction(p.c, (p.n + p.c) * binomial(p.n + p.b, p.b - p.c))


def beta_decomposition(p: SumParams, x: Fraction | int | str = 1) -> Decomposition:
    n, b, c = p.n, p.b, p.c
    # B(b-c+1, c+1) and B(b-c+2, c+1) in factorial form
    prefactor1 = (b + 1) * beta_int(b - c, c)
    series1 = HypSeries([-n, b - c + 1], [b + 2], x)
    if n == 0:
        return Decomposition(prefactor1, series1, Fraction(0), None)
    prefactor2 = n * beta_int(b - c + 1, c)
    series2 = HypSeries([1 - n, b - c + 2], [b + 3], x)
    return Decomposition(prefactor1, series1, prefactor2, series2)


def eval_decomposition(p: SumParams, x: Fraction | int | str) -> Fraction:
    return beta_decomposition(p).value(x)


@lru_cache(maxsize=None)
def stirling2(m: int, r: int) -> int:
    """Stirling numbers of the second kind, ``S(m, r) = r S(m-1, r) + S(m-1, r-1)``."""
    if m < 0 or r < 0:
        return 0
    if m == 0 or r == 0:
        return 1 if m == r else 0
    return r * stirling2(m - 1, r) + stirling2(m - 1, r - 1)


def _derivative_value(series: HypSeries, r: int) -> Fraction:
    coefficient, shifted = derivative_shift(series, r)
    if coefficient == 0:
        return Fraction(0)
    return coefficient * eval_terminating(shifted)


def weighted_closed(p: SumParams, x: Fraction | int | str, m: int) -> Fraction:
    """``(x d/dx)^m`` of the decomposition, via ``sum_r S(m,r) x^r d^r/dx^r``.

    The explicit factor x in I2 is handled by Leibniz:
    ``d^r [x F(x)] = x F^(r)(x) + r F^(r-1)(x)``.
    """
    if m < 0:
        raise ValueError(f"m >= 0 required, got {m}")
    x = as_rational(x)
    dec = beta_decomposition(p, x)
    total = Fraction(0)
    for r in range(m + 1):
        s = stirling2(m, r)
        if s == 0:
            continue
        deriv = dec.prefactor1 * _derivative_value(dec.series1, r)
        if dec.series2 is not None:
            d2 = x * _derivative_value(dec.series2, r)
            if r:
                d2 += r * _derivative_value(dec.series2, r - 1)
            deriv -= dec.prefactor2 * d2
        total += s * x**r * deriv
    return total


def lifted_series(p: SumParams, m: int) -> tuple[tuple[Fraction, HypSeries], tuple[Fraction, HypSeries] | None]:
    """The m-fold lifted series of both terms with their total coefficients.

    Returns ``((k1, F1), (k2, F2))`` such that the lifted sum is
    ``k1 F1(x) - k2 x F2(x)``; the second pair is ``None`` when n = 0.
    The second term carries an extra factor u under each integral, so its
    k-th coefficient is divided by ``(k+2)`` rather than ``(k+1)``.
    """
    dec = beta_decomposition(p)
    c1, f1 = lift_insert_harmonic(dec.series1, 1, m)
    first = (dec.prefactor1 * c1, f1)
    if dec.series2 is None:
        return first, None
    c2, f2 = lift_insert_harmonic(dec.series2, 2, m)
    return first, (dec.prefactor2 * c2, f2)


def lifted_closed(p: SumParams, x: Fraction | int | str, m: int) -> Fraction:
    if m < 0:
        raise ValueError(f"m >= 0 required, got {m}")
    x = as_rational(x)
    (k1, f1), second = lifted_series(p, m)
    total = k1 * eval_terminating(f1.at(x))
    if second is not None:
        k2, f2 = second
        total -= k2 * x * eval_terminating(f2.at(x))
    return total
