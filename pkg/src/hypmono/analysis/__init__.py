"""Threshold solving, monotonicity scans and two-sided bound checks."""

from .bounds import INEQUALITIES, BoundReport, bound_suite, check_bounds, suite_points
from .scan import GridEvaluationError, MonotonicityReport, geometric_a_grid, logit_arg_grid, scan_monotonicity
from .threshold import (
    THRESHOLD_IDS,
    ThresholdEstimate,
    lambda3star,
    lambda3star_sweep,
    lambda6bar,
    solve_threshold,
)

__all__ = [
    "INEQUALITIES", "THRESHOLD_IDS", "BoundReport", "GridEvaluationError", "MonotonicityReport",
    "ThresholdEstimate", "bound_suite", "check_bounds", "geometric_a_grid", "lambda3star",
    "lambda3star_sweep", "lambda6bar", "logit_arg_grid", "scan_monotonicity", "solve_threshold",
    "suite_points",
]
