"""Grid scans deciding the a-monotonicity of a family f = N / a^lambda.

The sign of a f'(a) / f(a) is sampled on an (a, arg) grid and aggregated
over all arg values.  Two estimators are available:

* ``ratio``: (a N' - lambda N) / |N| from the series pair, to about 1e-9;
* ``finite_difference``: central differences of ``family_eval`` in a with
  step 1e-5 a (one-sided at a = c/2), good to roughly 1e-6.

A sample counts against a verdict only when it exceeds the noise floor
of the estimator in the wrong direction.
"""

import math
from dataclasses import dataclass, field

from ..errors import ConvergenceError, DomainError
from ..families.series import FamilyId, family_eval, numerator_pair

DEFAULT_A_POINTS = 128
DEFAULT_ARG_POINTS = 32
ARG_LO = 1e-4
ARG_HI = 1.0 - 1e-6
A_LO_FRACTION = 1e-4
FD_STEP = 1e-5
NOISE = {"ratio": 1e-9, "finite_difference": 1e-6}
VERDICTS = ("increasing", "decreasing", "non_monotone", "inconclusive")


class GridEvaluationError(RuntimeError):
    """A grid point failed to evaluate; carries the offending location."""

    def __init__(self, location, cause):
        super().__init__(f"evaluation failed at (a, arg) = {location}: {cause}")
        self.location = location
        self.cause = cause


@dataclass(frozen=True)
class MonotonicityReport:
    family: FamilyId
    c: float
    arg: tuple
    a_grid_size: int
    verdict: str
    worst_violation: float
    location: tuple
    method: str = "ratio"
    noise: float = 0.0
    positive: int = 0
    negative: int = 0
    grid: tuple = field(default=(), repr=False)

    def as_dict(self):
        return {
            "family": self.family.id,
            "lambda": self.family.lam,
            "n": self.family.n,
            "c": self.c,
            "arg_grid_size": len(self.arg),
            "arg_min": min(self.arg),
            "arg_max": max(self.arg),
            "a_grid_size": self.a_grid_size,
            "method": self.method,
            "verdict": self.verdict,
            "worst_violation": self.worst_violation,
            "location": list(self.location),
            "noise": self.noise,
            "positive": self.positive,
            "negative": self.negative,
        }


def geometric_a_grid(c, points=DEFAULT_A_POINTS):
    half = 0.5 * c
    if points == 1:
        return (half,)
    lo = A_LO_FRACTION * half
    ratio = (half / lo) ** (1.0 / (points - 1))
    grid = [lo * ratio**k for k in range(points - 1)] + [half]
    return tuple(grid)


def logit_arg_grid(points=DEFAULT_ARG_POINTS, lo=ARG_LO, hi=ARG_HI):
    """Points evenly spaced in log(t / (1 - t)), so both ends get resolved."""
    if points == 1:
        return (0.5,)
    u0 = math.log(lo / (1.0 - lo))
    u1 = math.log(hi / (1.0 - hi))
    out = []
    for k in range(points):
        u = u0 + (u1 - u0) * k / (points - 1)
        out.append(1.0 / (1.0 + math.exp(-u)))
    out[0], out[-1] = lo, hi
    return tuple(out)


def _resolve(given, default):
    if given is None:
        return default()
    if isinstance(given, int):
        if given < 1:
            raise DomainError("grid size must be positive")
        return default(given)
    grid = tuple(float(v) for v in given)
    if not grid:
        raise DomainError("grid must be nonempty")
    return grid


def _fd_sign(fid, a, c, arg, tol, half):
    h = FD_STEP * a
    f0 = family_eval(fid, a, c, arg, tol)
    if a + h > half:
        fm1 = family_eval(fid, a - h, c, arg, tol)
        fm2 = family_eval(fid, a - 2.0 * h, c, arg, tol)
        deriv = (3.0 * f0 - 4.0 * fm1 + fm2) / (2.0 * h)
    else:
        deriv = (family_eval(fid, a + h, c, arg, tol) - family_eval(fid, a - h, c, arg, tol)) / (2.0 * h)
    scale = abs(f0) or 1.0
    return a * deriv / scale


def scan_monotonicity(fid, c=1.0, arg_grid=None, a_grid=None, method="ratio",
                      tol=1e-10, noise=None, keep_grid=False):
    """Aggregate the sign of a f'/f over the grid into a verdict.

    ``arg_grid`` and ``a_grid`` are an int (size of the default layout) or
    an explicit sequence.  The default a-grid is geometric on
    [1e-4 c/2, c/2]; the default arg-grid is logit-spaced on
    [1e-4, 1 - 1e-6].
    """
    if method not in NOISE:
        raise DomainError(f"unknown scan method {method!r}")
    if fid.uses_r:
        if c not in (None, 1, 1.0):
            raise DomainError(f"{fid.id} is defined with c = 1")
        c = 1.0
    c = float(c)
    if not (math.isfinite(c) and c > 0.0):
        raise DomainError(f"c must be > 0, got {c!r}")
    a_vals = _resolve(a_grid, lambda k=DEFAULT_A_POINTS: geometric_a_grid(c, k))
    args = _resolve(arg_grid, lambda k=DEFAULT_ARG_POINTS: logit_arg_grid(k))
    half = 0.5 * c
    for a in a_vals:
        if not (0.0 < a <= half):
            raise DomainError(f"a-grid value {a!r} outside (0, {half}]")
    for t in args:
        if not (0.0 < t < 1.0):
            raise DomainError(f"arg-grid value {t!r} outside (0, 1)")
    floor = NOISE[method] if noise is None else float(noise)

    rows = []
    pos = neg = 0
    hi_s = (-math.inf, None)
    lo_s = (math.inf, None)
    for a in a_vals:
        for t in args:
            try:
                if method == "ratio":
                    s = numerator_pair(fid, a, c, t, tol).sign_quantity(fid.lam)
                else:
                    s = _fd_sign(fid, a, c, t, tol, half)
            except (ConvergenceError, DomainError, ArithmeticError) as exc:
                raise GridEvaluationError((a, t), exc) from exc
            if keep_grid:
                rows.append((a, t, s))
            if s > floor:
                pos += 1
            elif s < -floor:
                neg += 1
            if s > hi_s[0]:
                hi_s = (s, (a, t))
            if s < lo_s[0]:
                lo_s = (s, (a, t))

    # worst_violation: how far the samples go against the reported direction
    if pos and not neg:
        verdict, worst, loc = "increasing", -lo_s[0], lo_s[1]
    elif neg and not pos:
        verdict, worst, loc = "decreasing", hi_s[0], hi_s[1]
    elif pos and neg:
        verdict = "non_monotone"
        # the smaller of the two opposing excursions
        if hi_s[0] <= -lo_s[0]:
            worst, loc = hi_s[0], hi_s[1]
        else:
            worst, loc = -lo_s[0], lo_s[1]
    else:
        verdict = "inconclusive"
        if hi_s[0] >= -lo_s[0]:
            worst, loc = hi_s[0], hi_s[1]
        else:
            worst, loc = -lo_s[0], lo_s[1]
    return MonotonicityReport(
        family=fid, c=c, arg=args, a_grid_size=len(a_vals), verdict=verdict,
        worst_violation=worst, location=loc, method=method, noise=floor,
        positive=pos, negative=neg, grid=tuple(rows),
    )
