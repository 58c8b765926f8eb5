"""Correction series P_1..P_8, the families f_1..f_7 / phi_1..phi_6 and their ratios.

Every family is a^(-lambda) times a numerator N(a) built from 2F1 at
(a, c - a; c) or (a - 1, c - a; c).  Each N is computed here together with
its scaled derivative a * N'(a):

* for x up to a crossover, from the power series whose coefficients are
  products of Pochhammer symbols (so N is never formed as a difference of
  nearly equal numbers), with the derivative carried as a weighted sum;
* above the crossover, from the logarithmic connection formulas around
  x = 1 in :mod:`hypmono.connection`.

The monotonicity of a^(-lambda) N(a) is governed by the sign of
a N'/N - lambda, which is what the ratio functions F_*, G_* return.
"""

import math
from dataclasses import dataclass, field

from ..connection import endpoint_values
from ..elliptic import complement
from ..errors import DomainError
from ..hyp2f1 import SeriesValue, ratio_series
from .lambdas import lambda_fn
from .sequences import check_ac, g_seq, scaled_a_diff, taylor_coeff_mu, taylor_coeff_nu

HALF_PI = 0.5 * math.pi
SERIES_CROSSOVER = 0.75
# the truncated families subtract finite sums, so they stay on the series longer
TRUNCATED_CROSSOVER = 0.9

GENERAL_FAMILIES = ("f1", "f2", "f3", "f4")
R_FAMILIES = ("f5", "f6", "f7", "phi1", "phi2", "phi3", "phi4", "phi5", "phi6")
INDEXED_FAMILIES = ("f5", "f6", "phi5", "phi6")
FAMILIES = GENERAL_FAMILIES + R_FAMILIES

RATIO_OF_FAMILY = {"f1": "F1", "f2": "F6", "f3": "F10", "f4": "F11", "f5": "G1", "f6": "G2"}
RATIO_IDS = ("F1", "F6", "F10", "F11", "G1", "G2")


@dataclass(frozen=True)
class ParamPoint:
    a: float
    c: float
    x: float

    def __post_init__(self):
        check_ac(self.a, self.c)
        if not (0.0 < self.x < 1.0):
            raise DomainError(f"x must lie in (0, 1), got {self.x!r}")


@dataclass(frozen=True)
class FamilyId:
    id: str
    lam: float = 0.0
    n: int | None = field(default=None)

    def __post_init__(self):
        if self.id not in FAMILIES:
            raise DomainError(f"unknown family {self.id!r}")
        if self.id in INDEXED_FAMILIES:
            if self.n is None or self.n < 0 or int(self.n) != self.n:
                raise DomainError(f"{self.id} needs a nonnegative integer n")
        elif self.n is not None:
            raise DomainError(f"{self.id} takes no truncation index")
        if not math.isfinite(self.lam):
            raise DomainError("lambda must be finite")

    @property
    def uses_r(self):
        return self.id in R_FAMILIES


@dataclass(frozen=True)
class NumeratorPair:
    """A family numerator N(a) and its scaled derivative a N'(a)."""

    value: float
    a_deriv: float

    @property
    def ratio(self):
        return self.a_deriv / self.value

    def sign_quantity(self, lam):
        """(a N' - lam N) / |N|, the sign of a f'(a) for f = N / a^lam."""
        scale = abs(self.value) or abs(self.a_deriv) or 1.0
        return (self.a_deriv - lam * self.value) / scale


# ---------------------------------------------------------------- P series

def P_series(i, lam=0.0, c=None, arg=None, n=None, tol=1e-12, a=0.5):
    """Correction series P_i; i <= 4 take (lam, c, x), i >= 5 take (r, n).

    P_5 and P_6 also depend on a (default 1/2, i.e. the barred versions).
    """
    if i not in range(1, 9):
        raise DomainError(f"P index must be 1..8, got {i!r}")
    if arg is None or not (0.0 < arg < 1.0):
        raise DomainError(f"argument must lie in (0, 1), got {arg!r}")
    if i <= 4:
        if c is None or not c > 0.0:
            raise DomainError(f"P_{i} needs c > 0")
        return _p_low(i, float(lam), float(c), float(arg), tol)
    if n is None or n < 0 or int(n) != n:
        raise DomainError(f"P_{i} needs a nonnegative integer n")
    n = int(n)
    x = arg * arg
    if i in (5, 6):
        check_ac(a, 1.0)
        g = 5 if i == 5 else 6
        total = 0.0
        fact = 1.0  # k! (k+1)!
        for k in range(n + 1):
            fact *= (k + 1.0) if k == 0 else k * (k + 1.0)
            total += g_seq(g, k, a) / fact * x ** (k + 1)
        return SeriesValue(HALF_PI * total, n + 1, 0.0)
    return SeriesValue(_p_tail(i, arg, n), n + 1, 0.0)


def _p_low(i, lam, c, x, tol):
    h = 0.5 * c
    if i == 1:
        res = ratio_series(c * x / 4.0, (h + 1.0, h + 1.0), (c + 1.0, 2.0), x, tol)
        scale = (2.0 / c) ** lam
    elif i == 2:
        res = ratio_series((1.0 - h) * x / 2.0, (h, h + 1.0), (c + 1.0, 2.0), x, tol)
        scale = (2.0 / c) ** lam
    elif i == 3:
        res = ratio_series(x / 2.0, (h, h + 1.0), (c + 1.0, 1.0), x, tol)
        scale = (2.0 / c) ** lam
    else:
        res = ratio_series(x / c, (h, h), (c + 1.0, 1.0), x, tol)
        scale = (2.0 / c) ** (lam - 1.0)
    return SeriesValue(scale * res.s, res.terms, scale * res.tail_s)


def _p_tail(i, r, n):
    # P_7 = (pi/2) sum_{k>n} x^{k+1}/k,  P_8 = (pi/2) sum_{k>n} x^{k+1}/(k(k+1))
    x = r * r
    if x <= 0.5:
        total = 0.0
        k = n + 1
        term = x ** (k + 1)
        while True:
            part = term / k if i == 7 else term / (k * (k + 1.0))
            total += part
            if part <= 1e-18 * total:
                break
            k += 1
            term *= x
        return HALF_PI * total
    rp = complement(r)
    log_rp = math.log(rp)
    if i == 7:
        head = -math.pi * x * log_rp
        fin = sum(x ** (k + 1) / k for k in range(1, n + 1))
    else:
        head = HALF_PI * (x + 2.0 * rp * rp * log_rp)
        fin = sum(x ** (k + 1) / (k * (k + 1.0)) for k in range(1, n + 1))
    return head - HALF_PI * fin


# ---------------------------------------------------------------- numerators

def _a_weights(a, c, start):
    """w_j = a (a_{start+j} - a_0) and the increment rule."""
    def step(j, w):
        m = start + j
        return w + a * (c - 2.0 * a) / ((a + m) * (c - a + m))
    return scaled_a_diff(start, a, c), step


def _l_weights(a, c, start):
    """w_j = a (a_{start+j+1} - a_0) - a / (start + j + a)."""
    def step(j, w):
        m = start + j
        return (w + a * (c - 2.0 * a) / ((a + m + 1.0) * (c - a + m + 1.0))
                - a / (m + 1.0 + a) + a / (m + a))
    return scaled_a_diff(start + 1, a, c) - a / (start + a), step


def _weighted(t0, alphas, betas, x, tol, weights, w_limit):
    w0, step = weights
    res = ratio_series(t0, alphas, betas, x, tol, w0=w0, w_step=step, w_limit=w_limit)
    return res.s, res.w


def _general_series(kind, a, c, x, tol):
    lam3 = lambda_fn(3, a, c)
    ca = c - a
    if kind == "f1":
        s, w = _weighted(a * ca * x / c, (a + 1.0, ca + 1.0), (c + 1.0, 2.0), x, tol,
                         _a_weights(a, c, 1), lam3)
        return NumeratorPair(s, w)
    if kind == "f2":
        s, w = _weighted(ca * x / c, (a, ca + 1.0), (c + 1.0, 2.0), x, tol,
                         _l_weights(a, c, 0), lam3)
        return NumeratorPair((1.0 - a) * s, (1.0 - a) * w - a * s)
    if kind == "f3":
        s, w = _weighted(ca * x / c, (a, ca + 1.0), (c + 1.0, 1.0), x, tol,
                         _l_weights(a, c, 0), lam3)
        return NumeratorPair(s, w)
    s, w = _weighted(x / c, (a, ca), (c + 1.0, 1.0), x, tol, _a_weights(a, c, 0), lam3)
    return NumeratorPair(a * s, a * (s + w))


def _general_endpoint(kind, a, c, y):
    ev = endpoint_values(a, c, y)
    if kind == "f1":
        return NumeratorPair(ev.d0, a * ev.d0p)
    if kind == "f2":
        return NumeratorPair(ev.d1, a * ev.d1p)
    if kind == "f3":
        return NumeratorPair(ev.d0 + ev.d1, a * (ev.d0p + ev.d1p))
    return NumeratorPair(ev.n4, a * ev.n4p)


def _fact_pair(k):
    # k! (k+1)!
    return math.factorial(k) * math.factorial(k + 1)


def _truncated_series(kind, a, n, x, tol):
    lam7 = lambda_fn(7, a)
    if kind == "f5":
        t0 = HALF_PI * g_seq(5, n + 1, a) / _fact_pair(n + 1) * x ** (n + 2)
        s, w = _weighted(t0, (a + n + 1.0, n + 2.0 - a + 1.0), (n + 2.0, n + 3.0), x, tol,
                         _l_weights(a, 1.0, n + 1), lam7)
        return NumeratorPair(s, w)
    if kind == "f6":
        t0 = HALF_PI * g_seq(6, n + 1, a) / _fact_pair(n + 1) * x ** (n + 2)
        w0, step = _a_weights(a, 1.0, n + 1)
        s, w = _weighted(t0, (a + n + 1.0, n + 2.0 - a), (n + 2.0, n + 3.0), x, tol,
                         (1.0 + w0, step), 1.0 + lam7)
        return NumeratorPair(s, w)
    if kind == "phi5":
        t0 = HALF_PI * taylor_coeff_nu(a, n + 1) * x ** (n + 1)
        s, w = _weighted(t0, (a + n + 1.0, n + 2.0 - a), (n + 2.0, n + 2.0), x, tol,
                         _a_weights(a, 1.0, n + 1), lam7)
        return NumeratorPair(s, w)
    # phi6 = (pi/2)(1 - a) sum_{k>n} (a, k-1)(1-a, k)/(k!)^2 x^k
    t0 = HALF_PI * -taylor_coeff_mu(a, n + 1) / (1.0 - a) * x ** (n + 1)
    s, w = _weighted(t0, (a + n, n + 2.0 - a), (n + 2.0, n + 2.0), x, tol,
                     _l_weights(a, 1.0, n), lam7)
    return NumeratorPair((1.0 - a) * s, (1.0 - a) * w - a * s)


def _finite_sum(kind, a, n, x):
    """The subtracted polynomial and its scaled a-derivative (times 2/pi)."""
    val = der = 0.0
    if kind == "f5":
        for k in range(n + 1):
            g = g_seq(5, k, a) / _fact_pair(k) * x ** (k + 1)
            val += g
            der += g * (scaled_a_diff(k + 1, a, 1.0) - a / (k + a))
    elif kind == "f6":
        for k in range(n + 1):
            g = g_seq(6, k, a) / _fact_pair(k) * x ** (k + 1)
            val += g
            der += g * (1.0 + scaled_a_diff(k, a, 1.0))
    elif kind == "phi5":
        for k in range(1, n + 1):
            t = taylor_coeff_nu(a, k) * x**k
            val += t
            der += t * scaled_a_diff(k, a, 1.0)
    else:
        for k in range(1, n + 1):
            t = taylor_coeff_mu(a, k) * x**k
            val += t
            der += t * (a / (a - 1.0) + scaled_a_diff(k, a, 1.0) - a / (a + (k - 1.0)))
    return val, der


def _truncated_endpoint(kind, a, n, y, x):
    ev = endpoint_values(a, 1.0, y)
    fin, fin_d = _finite_sum(kind, a, n, x)
    if kind == "f5":
        return NumeratorPair(HALF_PI * (ev.d0 + ev.d1 - fin),
                             HALF_PI * (a * (ev.d0p + ev.d1p) - fin_d))
    if kind == "f6":
        return NumeratorPair(HALF_PI * (ev.n4 - fin), HALF_PI * (a * ev.n4p - fin_d))
    if kind == "phi5":
        return NumeratorPair(HALF_PI * (ev.d0 - fin), HALF_PI * (a * ev.d0p - fin_d))
    return NumeratorPair(HALF_PI * (ev.d1 + fin), HALF_PI * (a * ev.d1p + fin_d))


def numerator_pair(fid, a, c, arg, tol=1e-12):
    """N(a) and a N'(a) for the family ``fid`` at (a, c, arg).

    ``arg`` is x for f1..f4 and r for the elliptic families (c = 1 there).
    For c > 2 the f2 numerator changes sign at a = 1; callers that need
    the sign should inspect ``value`` (the ratio a N'/N blows up there).
    """
    if isinstance(fid, str):
        fid = FamilyId(fid, 0.0, None)
    a = float(a)
    kind = fid.id
    if fid.uses_r:
        if c not in (None, 1, 1.0):
            raise DomainError(f"{kind} is defined with c = 1, got c={c!r}")
        check_ac(a, 1.0)
        r = float(arg)
        if not (0.0 < r < 1.0):
            raise DomainError(f"r must lie in (0, 1), got {r!r}")
        x = r * r
        y = complement(r) ** 2
        if kind.startswith("phi") and kind[-1] in "1234":
            pair = _general_pair("f" + kind[-1], a, 1.0, x, y, tol)
            return NumeratorPair(HALF_PI * pair.value, HALF_PI * pair.a_deriv)
        key, n = (kind, fid.n) if kind != "f7" else ("f6", 0)
        if x <= TRUNCATED_CROSSOVER:
            return _truncated_series(key, a, n, x, tol)
        return _truncated_endpoint(key, a, n, y, x)
    p = ParamPoint(a, float(c), float(arg))
    return _general_pair(kind, p.a, p.c, p.x, 1.0 - p.x, tol)


def _general_pair(kind, a, c, x, y, tol):
    if x <= SERIES_CROSSOVER:
        return _general_series(kind, a, c, x, tol)
    return _general_endpoint(kind, a, c, y)


def family_eval(fid, a, c, arg, tol=1e-12):
    """Value of the family a^(-lambda) N(a)."""
    pair = numerator_pair(fid, a, c, arg, tol)
    return pair.value * float(a) ** (-fid.lam)


# ---------------------------------------------------------------- ratio functions

_RATIO_FAMILY = {v: k for k, v in RATIO_OF_FAMILY.items()}
# (lambda index at arg -> 0+, lambda index at arg -> 1-)
_RATIO_LIMITS = {"F1": (2, 3), "F6": (4, 5), "F10": (1, 3), "F11": (None, 6),
                 "G1": (8, 7), "G2": (9, 10)}


def ratio_fn(rid, a, c, arg, n=None, tol=1e-10):
    """a * d/da log N for the numerator behind ratio function ``rid``.

    ``arg`` equal to 0 or 1 returns the corresponding one-sided limit.
    """
    if rid not in RATIO_IDS:
        raise DomainError(f"unknown ratio function {rid!r}")
    fam = _RATIO_FAMILY[rid]
    if rid in ("G1", "G2"):
        c = 1.0
    fid = FamilyId(fam, 0.0, n if fam in INDEXED_FAMILIES else None)
    if arg in (0.0, 1.0):
        lo, hi = _RATIO_LIMITS[rid]
        idx = lo if arg == 0.0 else hi
        if idx is None:
            check_ac(float(a), float(c))
            return 1.0
        return lambda_fn(idx, a, c, n if idx >= 8 else None)
    if rid == "F6" and float(a) == 1.0:
        raise DomainError("F6 is singular at a = 1 (the f2 numerator vanishes)")
    return numerator_pair(fid, a, c, arg, tol).ratio
