"""Backend selection for the binary64 kernels.

The compiled extension is preferred; the pure-Python module is used if it
is missing or if ``RECIPBINOM_PURE_PYTHON`` is set to a non-empty value
other than ``0``.
"""

from __future__ import annotations

import os

from . import _kernels_py

__all__ = ["BACKEND", "adaptive_quad", "compensated_sum", "integrand", "naive_sum", "load"]


def load(prefer_compiled: bool = True):
    """Return ``(name, module)`` for the requested backend, falling back to Python."""
    if prefer_compiled:
        try:
            from . import _kernels  # type: ignore[attr-defined]
        except ImportError:
            pass
        else:
            return "cython", _kernels
    return "python", _kernels_py


_force_pure = os.environ.get("RECIPBINOM_PURE_PYTHON", "") not in ("", "0")
BACKEND, _impl = load(prefer_compiled=not _force_pure)

naive_sum = _impl.naive_sum
compensated_sum = _impl.compensated_sum
integrand = _impl.integrand
adaptive_quad = _impl.adaptive_quad
