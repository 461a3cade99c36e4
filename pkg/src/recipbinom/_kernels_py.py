"""Pure-Python binary64 kernels.

Mirrors ``_kernels.pyx`` line for line; used when the compiled module is
unavailable or ``RECIPBINOM_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import math

# 7-point Gauss-Legendre on [-1, 1], positive half (node 0 is the centre)
GL_NODES = (0.0, 0.4058451513773972, 0.7415311855993945, 0.9491079123427585)
GL_WEIGHTS = (0.41795918367346896, 0.3818300505051183, 0.2797053914892766, 0.12948496616887065)

# panels whose halves agree to this relative level are at binary64 roundoff
ROUNDOFF = 64 * 2.0**-52


def naive_sum(values) -> float:
    total = 0.0
    for v in values:
        total += v
    return total


def compensated_sum(values) -> float:
    """Neumaier's variant of Kahan summation."""
    total = 0.0
    carry = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            carry += (total - t) + v
        else:
            carry += (v - t) + total
        total = t
    return total + carry


def integrand(t: float, n: int, b: int, c: int, x: float) -> float:
    """``t^c (1-t)^(b-c) [(b+1) y^n - n x (1-t) y^(n-1)]`` with ``y = 1 - x(1-t)``."""
    u = 1.0 - t
    weight = t**c * u ** (b - c)
    if n == 0:
        return weight * (b + 1)
    y = 1.0 - x * u
    yn1 = y ** (n - 1)
    return weight * ((b + 1) * yn1 * y - n * x * u * yn1)


def _gauss(lo: float, hi: float, n: int, b: int, c: int, x: float) -> float:
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    acc = GL_WEIGHTS[0] * integrand(mid, n, b, c, x)
    for i in range(1, 4):
        d = half * GL_NODES[i]
        acc += GL_WEIGHTS[i] * (integrand(mid - d, n, b, c, x) + integrand(mid + d, n, b, c, x))
    return acc * half


def adaptive_quad(n: int, b: int, c: int, x: float, tol: float, max_evals: int):
    """Adaptive bisection over [0, 1].

    Returns ``(value, error_estimate, evaluations, converged)``. A panel is
    accepted when its two halves agree with the whole to within ``tol``
    times the panel width, or to within roundoff of the panel's magnitude;
    in the latter case the error estimate may end up above ``tol``.
    """
    evals = 7
    stack = [(0.0, 1.0, _gauss(0.0, 1.0, n, b, c, x))]
    total = 0.0
    err = 0.0
    while stack:
        lo, hi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gauss(lo, mid, n, b, c, x)
        right = _gauss(mid, hi, n, b, c, x)
        evals += 14
        diff = math.fabs(left + right - whole)
        if diff <= tol * (hi - lo) or diff <= ROUNDOFF * (math.fabs(left) + math.fabs(right)):
            total += left + right
            err += diff
        elif evals > max_evals:
            return total + left + right, err + diff, evals, False
        else:
            stack.append((mid, hi, right))
            stack.append((lo, mid, left))
    return total, err, evals, True
