"""Exact rational scalars and the combinatorial primitives built on them.

Every value in the package is a :class:`fractions.Fraction`, which is kept
in lowest terms with a positive denominator after every operation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "InvalidParameters",
    "SumParams",
    "as_rational",
    "beta_int",
    "binomial",
    "factorial",
    "format_rational",
    "inverse_binomial_via_beta",
    "parse_rational",
    "pochhammer",
]


class InvalidParameters(ValueError):
    """Raised when (n, b, c) violate ``b >= c > 0, n >= 0``."""


@dataclass(frozen=True, order=True)
class SumParams:
    """Summation length ``n`` and binomial parameters ``b``, ``c``."""

    n: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("n", "b", "c"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParameters(f"{name} must be an integer, got {value!r}")
        if self.n < 0:
            raise InvalidParameters(f"n >= 0 required (got n={self.n})")
        if self.c <= 0:
            raise InvalidParameters(f"c > 0 required (got c={self.c})")
        if self.b < self.c:
            raise InvalidParameters(f"b >= c required (got b={self.b}, c={self.c})")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Decimal notation is rejected so that no value silently passes
    through binary floating point.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise InvalidParameters(f"malformed rational {text!r}; expected 'p/q' or 'p'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise InvalidParameters(f"malformed rational {text!r}; zero denominator")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` string, sign on the numerator, ``"p"`` for integers."""
    return str(Fraction(value))


def as_rational(value: int | Fraction | str) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for ``0 <= k <= n`` and 0 everywhere else."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def pochhammer(a: Fraction | int, k: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+k-1)``; ``(a)_0 = 1``."""
    if k < 0:
        raise ValueError(f"pochhammer requires k >= 0, got {k}")
    a = Fraction(a)
    result = Fraction(1)
    for j in range(k):
        result *= a + j
    return result


def beta_int(m: int, n: int) -> Fraction:
    """``m! n! / (m+n+1)!``, the integral of ``t^m (1-t)^n`` over [0, 1]."""
    if m < 0 or n < 0:
        raise ValueError(f"beta_int requires m, n >= 0, got ({m}, {n})")
    return Fraction(math.factorial(m) * math.factorial(n), math.factorial(m + n + 1))


def inverse_binomial_via_beta(b: int, c: int, k: int) -> Fraction:
    """``1 / C(b+k, c)`` written as ``(b+k+1) * beta_int(c, b+k-c)``."""
    SumParams(0, b, c)
    if k < 0:
        raise InvalidParameters(f"k >= 0 required (got k={k})")
    return (b + k + 1) * beta_int(c, b + k - c)
