"""Parameter families built on 2F1, their threshold functions and ratios."""

from .lambdas import A_ZERO_LIMITS, lambda_fn
from .sequences import g_logderiv, g_seq, seq_a, seq_b, taylor_coeff_mu, taylor_coeff_nu
from .series import (
    FAMILIES,
    RATIO_IDS,
    RATIO_OF_FAMILY,
    FamilyId,
    NumeratorPair,
    ParamPoint,
    P_series,
    family_eval,
    numerator_pair,
    ratio_fn,
)

__all__ = [
    "A_ZERO_LIMITS", "FAMILIES", "RATIO_IDS", "RATIO_OF_FAMILY", "FamilyId", "NumeratorPair",
    "ParamPoint", "P_series", "family_eval", "g_logderiv", "g_seq", "lambda_fn",
    "numerator_pair", "ratio_fn", "seq_a", "seq_b", "taylor_coeff_mu", "taylor_coeff_nu",
]
