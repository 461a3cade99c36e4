# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binary64 kernels; see ``_kernels_py.py`` for the reference twin."""

from libc.math cimport fabs, pow

cdef double[4] GL_NODES = [0.0, 0.4058451513773972, 0.7415311855993945, 0.9491079123427585]
cdef double[4] GL_WEIGHTS = [0.41795918367346896, 0.3818300505051183, 0.2797053914892766, 0.12948496616887065]
cdef double ROUNDOFF = 64 * 2.0**-52


def naive_sum(values):
    cdef double total = 0.0
    cdef double v
    for v in values:
        total += v
    return total


def compensated_sum(values):
    cdef double total = 0.0, carry = 0.0, t, v
    for v in values:
        t = total + v
        if fabs(total) >= fabs(v):
            carry += (total - t) + v
        else:
            carry += (v - t) + total
        total = t
    return total + carry


cdef inline double _integrand(double t, long n, long b, long c, double x) nogil:
    cdef double u = 1.0 - t
    cdef double weight = pow(t, <double>c) * pow(u, <double>(b - c))
    cdef double y, yn1
    if n == 0:
        return weight * (b + 1)
    y = 1.0 - x * u
    yn1 = pow(y, <double>(n - 1))
    return weight * ((b + 1) * yn1 * y - n * x * u * yn1)


def integrand(double t, long n, long b, long c, double x):
    return _integrand(t, n, b, c, x)


cdef double _gauss(double lo, double hi, long n, long b, long c, double x) nogil:
    cdef double half = 0.5 * (hi - lo)
    cdef double mid = 0.5 * (hi + lo)
    cdef double acc = GL_WEIGHTS[0] * _integrand(mid, n, b, c, x)
    cdef double d
    cdef int i
    for i in range(1, 4):
        d = half * GL_NODES[i]
        acc += GL_WEIGHTS[i] * (_integrand(mid - d, n, b, c, x) + _integrand(mid + d, n, b, c, x))
    return acc * half


def adaptive_quad(long n, long b, long c, double x, double tol, long max_evals):
    cdef long evals = 7
    cdef double total = 0.0, err = 0.0
    cdef double lo, hi, mid, whole, left, right, diff
    # explicit stack of (lo, hi, whole) triples
    cdef list stack = [(0.0, 1.0, _gauss(0.0, 1.0, n, b, c, x))]
    while stack:
        lo, hi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gauss(lo, mid, n, b, c, x)
        right = _gauss(mid, hi, n, b, c, x)
        evals += 14
        diff = fabs(left + right - whole)
        if diff <= tol * (hi - lo) or diff <= ROUNDOFF * (fabs(left) + fabs(right)):
            total += left + right
            err += diff
        elif evals > max_evals:
            return total + left + right, err + diff, evals, False
        else:
            stack.append((mid, hi, right))
            stack.append((lo, mid, left))
    return total, err, evals, True
