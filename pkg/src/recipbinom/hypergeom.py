"""Terminating generalized hypergeometric series with exact coefficients.

A series ``pFq(upper; lower; x)`` terminates when some upper parameter is a
non-positive integer ``-N``; it is then a polynomial of degree at most ``N``
in ``x``, so any rational argument is admissible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exact import as_rational, format_rational, parse_rational, pochhammer

__all__ = [
    "HypSeries",
    "InvalidSeries",
    "derivative_shift",
    "eval_terminating",
    "iter_terms",
    "lift_insert_harmonic",
    "series_coefficients",
]


class InvalidSeries(ValueError):
    """The parameter lists do not describe a well-defined terminating series."""


def _nonpositive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


def _truncation_of(upper: Sequence[Fraction]) -> int | None:
    orders = [-u.numerator for u in upper if _nonpositive_integer(u)]
    return min(orders) if orders else None


@dataclass(frozen=True, init=False)
class HypSeries:
    """``pFq(upper; lower; x)`` together with its truncation index.

    ``truncation`` is derived from the upper parameters unless given
    explicitly; the only legitimate explicit value is ``-1``, which marks an
    identically zero (empty) series produced by over-differentiation.
    """

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    x: Fraction
    truncation: int

    def __init__(
        self,
        upper: Iterable[int | Fraction | str],
        lower: Iterable[int | Fraction | str],
        x: int | Fraction | str = 1,
        truncation: int | None = None,
    ) -> None:
        up = tuple(as_rational(u) for u in upper)
        lo = tuple(as_rational(v) for v in lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "x", as_rational(x))
        if truncation is None:
            truncation = _truncation_of(up)
            if truncation is None:
                raise InvalidSeries(
                    f"no non-positive integer upper parameter in {_fmt(up)}; series does not terminate"
                )
        elif truncation != -1:
            raise InvalidSeries("explicit truncation is only allowed for the empty series (-1)")
        object.__setattr__(self, "truncation", truncation)
        for v in lo:
            if _nonpositive_integer(v) and -v.numerator <= truncation:
                raise InvalidSeries(
                    f"lower parameter {v} vanishes inside the summed range 0..{truncation}"
                )

    @property
    def order(self) -> tuple[int, int]:
        """``(p, q)`` for a ``pFq``."""
        return len(self.upper), len(self.lower)

    def at(self, x: int | Fraction | str) -> "HypSeries":
        """Same parameters, different argument."""
        if self.truncation == -1:
            return HypSeries(self.upper, self.lower, x, truncation=-1)
        return HypSeries(self.upper, self.lower, x)

    def to_json(self) -> dict:
        return {
            "upper": [format_rational(u) for u in self.upper],
            "lower": [format_rational(v) for v in self.lower],
            "x": format_rational(self.x),
        }

    @classmethod
    def from_json(cls, data: dict) -> "HypSeries":
        return cls(
            [parse_rational(u) for u in data["upper"]],
            [parse_rational(v) for v in data["lower"]],
            parse_rational(data["x"]),
        )

    def __str__(self) -> str:
        p, q = self.order
        return f"{p}F{q}({_fmt(self.upper)}; {_fmt(self.lower)}; {self.x})"


def _fmt(values: Sequence[Fraction]) -> str:
    # display only: evaluation keeps insertion order
    return ", ".join(str(v) for v in sorted(values))


def iter_terms(series: HypSeries) -> Iterator[Fraction]:
    """Yield the terms ``t_0 .. t_N`` via ``t_{k+1} = t_k prod(u+k) / prod(v+k) x / (k+1)``."""
    x = series.x
    term = Fraction(1)
    for k in range(series.truncation + 1):
        yield term
        if k == series.truncation:
            return
        num = Fraction(1)
        for u in series.upper:
            num *= u + k
        den = Fraction(1)
        for v in series.lower:
            den *= v + k
        if den == 0:
            raise InvalidSeries(f"lower parameter hits zero at k={k}")
        term = term * num / den * x / (k + 1)


def eval_terminating(series: HypSeries) -> Fraction:
    """Exact value of a terminating series (``truncation + 1`` term additions)."""
    total = Fraction(0)
    for term in iter_terms(series):
        total += term
    return total


def series_coefficients(series: HypSeries) -> list[Fraction]:
    """Polynomial coefficients ``c_k`` (in powers of x) from Pochhammer products.

    Independent of :func:`eval_terminating`: every coefficient is built from
    scratch as ``prod (u)_k / prod (v)_k / k!``.
    """
    coeffs = []
    k_fact = 1
    for k in range(series.truncation + 1):
        if k:
            k_fact *= k
        num = Fraction(1)
        for u in series.upper:
            num *= pochhammer(u, k)
        den = Fraction(1)
        for v in series.lower:
            den *= pochhammer(v, k)
        coeffs.append(num / den / k_fact)
    return coeffs


def derivative_shift(series: HypSeries, r: int) -> tuple[Fraction, HypSeries]:
    """r-th derivative in x as ``coefficient * shifted``.

    ``d^r/dx^r pFq(a; b; x) = prod (a_i)_r / prod (b_j)_r * pFq(a + r; b + r; x)``.
    When ``r`` exceeds the truncation the coefficient is 0 and ``shifted`` is
    the empty series (truncation -1), which evaluates to 0.
    """
    if r < 0:
        raise ValueError(f"derivative order must be >= 0, got {r}")
    if r == 0:
        return Fraction(1), series
    coefficient = Fraction(1)
    for u in series.upper:
        coefficient *= pochhammer(u, r)
    for v in series.lower:
        coefficient /= pochhammer(v, r)
    upper = [u + r for u in series.upper]
    lower = [v + r for v in series.lower]
    if coefficient == 0 or series.truncation < r:
        return Fraction(0), HypSeries(upper, lower, series.x, truncation=-1)
    return coefficient, HypSeries(upper, lower, series.x)


def lift_insert_harmonic(series: HypSeries, shift: int, m: int) -> tuple[Fraction, HypSeries]:
    """Divide the k-th term by ``(k + shift)**m``.

    Uses ``1/(k+s) = (1/s) * (s)_k / (s+1)_k``: appends ``m`` copies of
    ``s`` to the upper list and ``m`` copies of ``s+1`` to the lower list,
    and returns the overall factor ``s**-m``.
    """
    if shift < 1:
        raise ValueError(f"shift must be >= 1, got {shift}")
    if m < 0:
        raise ValueError(f"lift count must be >= 0, got {m}")
    if m == 0:
        return Fraction(1), series
    upper = list(series.upper) + [Fraction(shift)] * m
    lower = list(series.lower) + [Fraction(shift + 1)] * m
    truncation = -1 if series.truncation == -1 else None
    return Fraction(1, shift**m), HypSeries(upper, lower, series.x, truncation=truncation)
