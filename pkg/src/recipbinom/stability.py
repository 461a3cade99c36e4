"""Floating-point behaviour of the alternating sums.

Compares naive binary64 summation of the parametric sum with the closed
forms rounded once, measures the cancellation through an exactly computed
condition number, and integrates the Beta-integral representation
numerically as an independent check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .closed_forms import eval_decomposition, frisch
from .exact import SumParams, as_rational
from .oracle import parametric_terms

__all__ = [
    "NoConvergence",
    "StabilityReport",
    "float_direct_conditioned",
    "quad_check",
    "stability_report",
]

log = logging.getLogger(__name__)

QUAD_BUDGET = 10**6


class NoConvergence(RuntimeError):
    """Adaptive quadrature ran out of budget or hit binary64 roundoff above ``tol``."""


@dataclass(frozen=True)
class StabilityReport:
    """One parameter point of the stability scan.

    When the exact value is zero, ``exact_zero`` is set, the ``relerr_*``
    fields hold absolute errors instead and ``condition`` is ``None``.
    """

    params: SumParams
    x: Fraction
    exact: Fraction
    float_direct: float
    float_compensated: float
    float_closed: float
    relerr_direct: float
    relerr_closed: float
    condition: Fraction | None
    exact_zero: bool = False

    def row(self) -> dict:
        return {
            "n": self.params.n,
            "b": self.params.b,
            "c": self.params.c,
            "x": str(self.x),
            "exact": str(self.exact),
            "float_direct": self.float_direct,
            "float_compensated": self.float_compensated,
            "float_closed": self.float_closed,
            "relerr_direct": self.relerr_direct,
            "relerr_closed": self.relerr_closed,
            "condition": None if self.condition is None else str(self.condition),
            "exact_zero": self.exact_zero,
        }


def _condition(terms: list[Fraction]) -> Fraction | None:
    total = sum(terms, Fraction(0))
    if total == 0:
        return None
    return sum((abs(t) for t in terms), Fraction(0)) / abs(total)


def float_direct_conditioned(p: SumParams, x: Fraction | int | str) -> tuple[float, Fraction | None]:
    """Naive ascending binary64 sum and the exact condition number.

    Each term is the exact rational term rounded once; only the summation
    runs in floating point. The condition number is ``None`` when the sum
    is exactly zero.
    """
    terms = parametric_terms(p, x)
    value = kernels.naive_sum([float(t) for t in terms])
    return value, _condition(terms)


def stability_report(p: SumParams, x: Fraction | int | str) -> StabilityReport:
    x = as_rational(x)
    terms = parametric_terms(p, x)
    floats = [float(t) for t in terms]
    exact = sum(terms, Fraction(0))
    closed = frisch(p) if x == 1 else eval_decomposition(p, x)
    float_direct = kernels.naive_sum(floats)
    float_closed = float(closed)
    if exact == 0:
        log.warning("exact value is zero at %s, x=%s; reporting absolute errors", p, x)
        return StabilityReport(
            p, x, exact, float_direct, kernels.compensated_sum(floats), float_closed,
            abs(float_direct), abs(float_closed), None, exact_zero=True,
        )
    # error computed in exact arithmetic, rounded at the end
    relerr_direct = float(abs(Fraction(float_direct) - exact) / abs(exact))
    relerr_closed = float(abs(Fraction(float_closed) - exact) / abs(exact))
    return StabilityReport(
        p, x, exact, float_direct, kernels.compensated_sum(floats), float_closed,
        relerr_direct, relerr_closed, _condition(terms),
    )


def quad_check(p: SumParams, x: Fraction | int | str, tol: float, max_evals: int = QUAD_BUDGET) -> float:
    """Integrate the Beta-integral representation of the parametric sum.

    Raises :class:`NoConvergence` when the panel tolerance is not reached
    within ``max_evals`` integrand evaluations, or when roundoff in the
    integrand keeps the error estimate above ``tol``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    xf = float(as_rational(x))
    value, err, evals, converged = kernels.adaptive_quad(p.n, p.b, p.c, xf, tol, max_evals)
    if not converged:
        raise NoConvergence(f"{p}, x={x}: budget exhausted after {evals} evaluations, error estimate {err:.3e}")
    if err > tol:
        raise NoConvergence(f"{p}, x={x}: roundoff-limited, error estimate {err:.3e} > tol {tol:.3e}")
    return value
