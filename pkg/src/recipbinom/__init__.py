"""Exact evaluation and cross-verification of reciprocal binomial sums."""

from .closed_forms import (
    Decomposition,
    beta_decomposition,
    eval_decomposition,
    frisch,
    lifted_closed,
    stirling2,
    weighted_closed,
)
from .exact import (
    ExactRational,
    InvalidParameters,
    SumParams,
    beta_int,
    binomial,
    factorial,
    inverse_binomial_via_beta,
    parse_rational,
    pochhammer,
)
from .hypergeom import HypSeries, InvalidSeries, derivative_shift, eval_terminating, lift_insert_harmonic
from .kernels import BACKEND
from .oracle import (
    SumPolynomial,
    apply_x_ddx,
    direct_lifted,
    direct_parametric,
    direct_sum,
    direct_weighted,
    polynomial_coeffs,
)
from .stability import NoConvergence, StabilityReport, float_direct_conditioned, quad_check, stability_report

__version__ = "0.1.0"
