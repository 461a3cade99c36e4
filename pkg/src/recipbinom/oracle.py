"""Brute-force reference sums.

Everything here is evaluated term by term straight from the definitions;
the closed forms in :mod:`recipbinom.closed_forms` are checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import SumParams, as_rational, binomial

__all__ = [
    "SumPolynomial",
    "apply_x_ddx",
    "direct_lifted",
    "direct_parametric",
    "direct_sum",
    "direct_weighted",
    "parametric_terms",
    "polynomial_coeffs",
]


@dataclass(frozen=True)
class SumPolynomial:
    """Dense coefficient list of a polynomial in x, lowest degree first."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(Fraction(a) for a in self.coefficients))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: Fraction | int | str) -> Fraction:
        # Horner
        x = as_rational(x)
        acc = Fraction(0)
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc


def _term(p: SumParams, k: int) -> Fraction:
    sign = -1 if k % 2 else 1
    return Fraction(sign * binomial(p.n, k), binomial(p.b + k, p.c))


def direct_sum(p: SumParams) -> Fraction:
    """``sum_k (-1)^k C(n,k) / C(b+k,c)``."""
    return sum((_term(p, k) for k in range(p.n + 1)), Fraction(0))


def parametric_terms(p: SumParams, x: Fraction | int | str) -> list[Fraction]:
    """The individual terms ``(-1)^k C(n,k) x^k / C(b+k,c)``, k = 0..n."""
    x = as_rational(x)
    return [_term(p, k) * x**k for k in range(p.n + 1)]


def direct_parametric(p: SumParams, x: Fraction | int | str) -> Fraction:
    return sum(parametric_terms(p, x), Fraction(0))


def direct_weighted(p: SumParams, x: Fraction | int | str, m: int) -> Fraction:
    """``sum_k (-1)^k C(n,k) k^m x^k / C(b+k,c)`` with ``0**0 == 1``."""
    if m < 0:
        raise ValueError(f"m >= 0 required, got {m}")
    x = as_rational(x)
    total = Fraction(0)
    for k in range(p.n + 1):
        total += k**m * _term(p, k) * x**k
    return total


def direct_lifted(p: SumParams, x: Fraction | int | str, m: int) -> Fraction:
    """``sum_k (-1)^k C(n,k) x^k / ((k+1)^m C(b+k,c))``."""
    if m < 0:
        raise ValueError(f"m >= 0 required, got {m}")
    x = as_rational(x)
    total = Fraction(0)
    for k in range(p.n + 1):
        total += _term(p, k) * x**k / (k + 1) ** m
    return total


def polynomial_coeffs(p: SumParams) -> SumPolynomial:
    return SumPolynomial(tuple(_term(p, k) for k in range(p.n + 1)))


def apply_x_ddx(poly: SumPolynomial | Sequence[Fraction], m: int) -> SumPolynomial:
    """Apply ``(x d/dx)^m``, i.e. scale coefficient k by ``k**m``."""
    if m < 0:
        raise ValueError(f"m >= 0 required, got {m}")
    coeffs = poly.coefficients if isinstance(poly, SumPolynomial) else tuple(poly)
    return SumPolynomial(tuple(k**m * a for k, a in enumerate(coeffs)))
