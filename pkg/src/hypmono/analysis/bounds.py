"""Two-sided bound checks and seeded quasi-random bound suites.

Every inequality has the shape lower <= middle <= upper where the middle
is a family numerator (plus a constant for th1 and th2) and both bounds
are built from the a = c/2 (or a = 1/2) value of that numerator.  Slacks
are formed from the small quantities directly, so that adding the
constant 1 for th1/th2 does not eat digits.
"""

import math
from dataclasses import dataclass

from scipy.stats import qmc

from ..elliptic import EllipticPoint
from ..errors import DomainError
from ..families.series import SERIES_CROSSOVER, FamilyId, P_series, ParamPoint, numerator_pair
from .threshold import cached_threshold

INEQUALITIES = ("th1", "th2", "th3", "th4", "th31", "th32", "cor33")
ELLIPTIC_INEQUALITIES = ("th31", "th32", "cor33")
TH4_EXPONENTS = ("lambda6bar", "lambda3star")
SUITE_C_RANGE = {"th2": (0.05, 1.95)}
DEFAULT_C_RANGE = (0.05, 4.0)
SUITE_MAX_N = 3
EDGE = 1e-6


@dataclass(frozen=True)
class BoundReport:
    inequality_id: str
    point: object
    lower: float
    middle: float
    upper: float
    lower_slack: float
    upper_slack: float
    n: int | None = None

    @property
    def min_slack(self):
        return min(self.lower_slack, self.upper_slack)

    def holds(self, tol):
        return self.min_slack >= -tol

    def as_dict(self):
        p = self.point
        out = {"inequality_id": self.inequality_id, "a": p.a}
        if isinstance(p, ParamPoint):
            out.update(c=p.c, x=p.x)
        else:
            out.update(c=1.0, r=p.r)
        out.update(
            n=self.n, lower=self.lower, middle=self.middle, upper=self.upper,
            lower_slack=self.lower_slack, upper_slack=self.upper_slack,
        )
        return out


def _power(base, expo):
    # base > 0; exp of the log so huge negative exponents give inf, not OverflowError
    t = expo * math.log(base)
    return math.inf if t > 709.0 else math.exp(t)


def _numerator(kind, a, c, arg, n=None, tol=1e-12):
    return numerator_pair(FamilyId(kind, 0.0, n), a, c, arg, tol).value


def _bar_value(i, c, x):
    # P_i(0, c, x) is the a = c/2 numerator; near x = 1 the series is too slow
    if x <= SERIES_CROSSOVER:
        return P_series(i, 0.0, c, x).value
    return _numerator(f"f{i}", 0.5 * c, c, x)


def _th_exponent(c, tol):
    # exponent 1 for c <= 1, the per-c lambda_3 supremum beyond
    return 1.0 if c <= 1.0 else cached_threshold("lambda3star", c, None, tol).value


def check_bounds(inequality_id, point, tol=1e-9, n=None, th4_exponent="lambda6bar",
                 threshold_tol=1e-12):
    """Evaluate one two-sided inequality at ``point``.

    ``point`` is a ParamPoint for th1..th4 and an EllipticPoint for the
    elliptic inequalities, which also take the truncation index ``n``
    (cor33 is the n = 0 case and ignores it).  ``tol`` only enters
    through :meth:`BoundReport.holds`; it is kept here so callers can
    pass a single configuration around.
    """
    if inequality_id not in INEQUALITIES:
        raise DomainError(f"unknown inequality {inequality_id!r}")
    if th4_exponent not in TH4_EXPONENTS:
        raise DomainError(f"th4 exponent must be one of {TH4_EXPONENTS}")
    if inequality_id in ELLIPTIC_INEQUALITIES:
        if not isinstance(point, EllipticPoint):
            raise DomainError(f"{inequality_id} needs an EllipticPoint")
        if not (point.a <= 0.5 and 0.0 < point.r < 1.0):
            raise DomainError("elliptic bounds need a in (0, 1/2] and r in (0, 1)")
        if inequality_id == "cor33":
            n = 0
        elif n is None or n < 0 or int(n) != n:
            raise DomainError(f"{inequality_id} needs a nonnegative integer n")
        return _elliptic_bound(inequality_id, point, int(n))
    if not isinstance(point, ParamPoint):
        raise DomainError(f"{inequality_id} needs a ParamPoint")
    a, c, x = point.a, point.c, point.x
    q = 2.0 * a / c
    pbar = _bar_value(int(inequality_id[2]), c, x)

    if inequality_id == "th1":
        p1 = pbar
        n1 = _numerator("f1", a, c, x)
        lo = _power(q, _th_exponent(c, threshold_tol)) * p1
        hi = min(p1, -a * math.log1p(-x))
        return BoundReport("th1", point, 1.0 + lo, 1.0 + n1, 1.0 + hi, n1 - lo, hi - n1)
    if inequality_id == "th2":
        if not c < 2.0:
            raise DomainError("th2 needs c in (0, 2)")
        p2 = pbar
        n2 = _numerator("f2", a, c, x)
        cap = min(x, _power(q, 2.0 / (c - 2.0)) * p2)
        return BoundReport("th2", point, 1.0 - cap, 1.0 - n2, 1.0 - p2, cap - n2, n2 - p2)
    if inequality_id == "th3":
        p3 = pbar
        n3 = _numerator("f3", a, c, x)
        lo = _power(q, _th_exponent(c, threshold_tol)) * p3
        hi = p3 / q
        return BoundReport("th3", point, lo, n3, hi, n3 - lo, hi - n3)
    p4 = pbar
    n4 = _numerator("f4", a, c, x)
    if th4_exponent == "lambda6bar":
        expo = cached_threshold("lambda6sup", c, None, threshold_tol).value
    else:
        expo = _th_exponent(c, threshold_tol)
    lo = max(a * x / c, _power(q, expo) * p4)
    hi = q * p4
    return BoundReport("th4", point, lo, n4, hi, n4 - lo, hi - n4)


def _elliptic_bound(iid, point, n):
    a, r = point.a, point.r
    if iid == "th31":
        mid = _numerator("f5", a, 1.0, r, n)
        bar = _numerator("f5", 0.5, 1.0, r, n)
        lo = 2.0 * a * bar
        hi = min(a * P_series(7, arg=r, n=n).value, _power(2.0 * a, -1.0 / (2 * n + 3)) * bar)
    elif iid == "th32":
        mid = _numerator("f6", a, 1.0, r, n)
        bar = _numerator("f6", 0.5, 1.0, r, n)
        expo = cached_threshold("lambda10bar", None, n, 1e-12).value
        lo = _power(2.0 * a, expo) * bar
        hi = 2.0 * a * bar
    else:
        mid = _numerator("f7", a, 1.0, r)
        # 4 (E - r'^2 K) - pi r^2 is four times the a = 1/2 numerator
        lo = a * a * 4.0 * _numerator("f7", 0.5, 1.0, r)
        hi = a * a * P_series(8, arg=r, n=0).value
    return BoundReport(iid, point, lo, mid, hi, mid - lo, hi - mid, n)


def _clip(u):
    return min(max(u, EDGE), 1.0 - EDGE)


def suite_points(inequality_id, samples=1000, seed=42, n=None):
    """Deterministic scrambled-Halton points in the inequality's domain.

    Returns (point, n) pairs.  For th31/th32 without a fixed ``n`` the
    index cycles through 0..3.
    """
    if inequality_id not in INEQUALITIES:
        raise DomainError(f"unknown inequality {inequality_id!r}")
    if samples < 1:
        raise DomainError("samples must be positive")
    elliptic = inequality_id in ELLIPTIC_INEQUALITIES
    u = qmc.Halton(d=3, scramble=True, seed=seed).random(samples)
    out = []
    for u0, u1, u2 in u:
        v = 1.0 - float(u1)  # (0, 1]
        if elliptic:
            if inequality_id == "cor33":
                nk = 0
            else:
                nk = int(n) if n is not None else min(int(u2 * (SUITE_MAX_N + 1)), SUITE_MAX_N)
            out.append((EllipticPoint(0.5 * v, _clip(float(u0))), nk))
        else:
            c_lo, c_hi = SUITE_C_RANGE.get(inequality_id, DEFAULT_C_RANGE)
            c = c_lo + (c_hi - c_lo) * float(u0)
            out.append((ParamPoint(0.5 * c * v, c, _clip(float(u2))), None))
    return out


def bound_suite(inequality_id, samples=1000, seed=42, tol=1e-9, n=None, **kw):
    """Check an inequality on seeded quasi-random points.

    Returns (reports, worst) where ``worst`` is the report with the
    smallest slack.
    """
    reports = [
        check_bounds(inequality_id, p, tol, n=nk, **kw)
        for p, nk in suite_points(inequality_id, samples, seed, n)
    ]
    worst = min(reports, key=lambda rep: rep.min_slack)
    return reports, worst
