"""Exact computer algebra for lambda-Changhee polynomials and the linear ODEs
their generating function satisfies."""
from .combinatorics import falling_factorial  # noqa: F401, harmonic, multinomial, power_sum, stirling
from .errors import (
    ChangheeError,
    NegativeLaurentAtZero,
    NonzeroConstant,
    NotAUnit,
    OrderExhausted,
    OutOfDomain,
    PartsMismatch,
    PoleNotCancelled,
)
from .harness import VerificationReport, background_checks, thm2_check, thm3_check, thm4_check, thm4_rhs
from .ode_coeffs import (
    CoeffTable,
    coeffs_by_closed_form,
    coeffs_by_recurrence,
    f_derivative_oracle,
    f_series,
    ode_residual,
    ode_rhs,
)
from .series import TruncatedSeries
from .special_polys import (
    PolySequence,
    changhee_polys,
    euler_polys,
    lambda_changhee_numbers,
    lambda_changhee_polys,
)
from .xlpoly import LAM, ONE, X, ZERO, XLPoly

__version__ = "0.1.0"
