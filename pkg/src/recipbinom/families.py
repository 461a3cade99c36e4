"""Name-based dispatch over the four sum families."""

from __future__ import annotations

from fractions import Fraction

from .closed_forms import eval_decomposition, frisch, lifted_closed, weighted_closed
from .exact import SumParams
from .oracle import apply_x_ddx, direct_lifted, direct_parametric, direct_sum, direct_weighted, polynomial_coeffs

FAMILIES = ("frisch", "parametric", "weighted", "lifted")


def closed_value(family: str, p: SumParams, x: Fraction, m: int) -> Fraction:
    if family == "frisch":
        return frisch(p)
    if family == "parametric":
        return eval_decomposition(p, x)
    if family == "weighted":
        return weighted_closed(p, x, m)
    if family == "lifted":
        return lifted_closed(p, x, m)
    raise ValueError(f"unknown family {family!r}")


def check(family: str, p: SumParams, x: Fraction, m: int) -> tuple[Fraction, Fraction, bool]:
    """Closed form against brute force; exact equality only.

    Returns ``(closed, oracle, ok)``. Families with more than two routes
    require all of them to agree.
    """
    if family == "frisch":
        closed = frisch(p)
        oracle = direct_sum(p)
        ok = closed == oracle == eval_decomposition(p, 1)
    elif family == "parametric":
        closed = eval_decomposition(p, x)
        oracle = direct_parametric(p, x)
        ok = closed == oracle == polynomial_coeffs(p)(x)
    elif family == "weighted":
        closed = weighted_closed(p, x, m)
        oracle = direct_weighted(p, x, m)
        ok = closed == oracle == apply_x_ddx(polynomial_coeffs(p), m)(x)
    elif family == "lifted":
        closed = lifted_closed(p, x, m)
        oracle = direct_lifted(p, x, m)
        ok = closed == oracle
    else:
        raise ValueError(f"unknown family {family!r}")
    return closed, oracle, ok
