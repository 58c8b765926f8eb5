"""Gaussian hypergeometric function, generalized elliptic integrals and
parameter-monotonicity tools (threshold constants, grid scans, sharp bounds)."""

from .elliptic import E_a, E_a_prime, EllipticPoint, K_a, K_a_prime
from .errors import ConvergenceError, DomainError, IntegrandSingularityWarning
from .hyp2f1 import (
    SeriesValue,
    agm_complete_elliptic,
    f21_at_one,
    f21_euler_integral,
    f21_series,
    zero_balanced_asymptote,
)
from .specialfn import EULER_GAMMA, beta, digamma, gamma, log_gamma, pochhammer

__version__ = "0.1.0"
