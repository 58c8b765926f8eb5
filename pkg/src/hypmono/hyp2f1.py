"""Gaussian hypergeometric function 2F1 on real 0 <= x < 1, plus oracles.

The workhorse is :func:`ratio_series`, a generic summation engine for
power series whose term ratio is a rational function of the index.  It
returns a certified bound on the truncation error, and can carry a second
"weighted" sum alongside the plain one (used by the parameter-derivative
ratios in :mod:`hypmono.families`).
"""

import math
import warnings
from dataclasses import dataclass

from scipy import integrate

from .errors import ConvergenceError, DomainError, IntegrandSingularityWarning
from .specialfn import beta, log_gamma

DEFAULT_MAX_TERMS = 10**6


@dataclass(frozen=True)
class SeriesValue:
    value: float
    terms_used: int
    tail_bound: float


@dataclass(frozen=True)
class _Sums:
    s: float
    w: float
    terms: int
    tail_s: float
    tail_w: float


def _ratio_sup(m, x, alphas, betas):
    """Upper bound for |t_{k+1}/t_k| over all k >= m, or None if not yet valid."""
    q = abs(x)
    for al, be in zip(alphas, betas):
        if m + al <= 0.0 or m + be <= 0.0:
            return None
        q *= max((m + al) / (m + be), 1.0)
    return q


def ratio_series(t0, alphas, betas, x, tol, *, w0=None, w_step=None, w_limit=None,
                 absolute=False, max_terms=DEFAULT_MAX_TERMS):
    """Sum t_k with t_{k+1} = t_k * x * prod(k + alpha) / prod(k + beta).

    ``alphas`` and ``betas`` must have equal length (pad with 1.0 for the
    factorial).  When ``w0`` is given, the weighted sum sum(t_k * w_k) is
    accumulated too, with ``w_{k+1} = w_step(k, w_k)``; the weights must be
    monotone in k with limit ``w_limit`` so that max(|w_{N+1}|, |w_limit|)
    bounds every later weight.

    Stops once the geometric tail bound drops below ``tol * |S|`` (or
    ``tol * max(1, |S|)`` when ``absolute`` is set).  The weighted tail must
    also fall below ``tol * |W|``, floored at ``1e-3 * tol * |S|`` because W
    may pass through zero.
    """
    if len(alphas) != len(betas):
        raise ValueError("alphas and betas must have the same length")
    weighted = w0 is not None
    s = 0.0
    w_sum = 0.0
    t = t0
    wk = w0
    k = 0
    while True:
        s += t
        if weighted:
            w_sum += t * wk
        num = x
        for al, be in zip(alphas, betas):
            num *= (k + al) / (k + be)
        t_next = t * num
        w_next = w_step(k, wk) if weighted else None
        k += 1
        if t_next == 0.0:
            return _Sums(s, w_sum, k, 0.0, 0.0)
        q = _ratio_sup(k, x, alphas, betas)
        if q is not None and q < 1.0:
            tail_s = abs(t_next) / (1.0 - q)
            scale = max(1.0, abs(s)) if absolute else abs(s)
            done = tail_s <= tol * scale
            tail_w = 0.0
            if weighted:
                tail_w = max(abs(w_next), abs(w_limit)) * tail_s
                done = done and tail_w <= tol * max(abs(w_sum), 1e-3 * abs(s))
            if done:
                return _Sums(s, w_sum, k, tail_s, tail_w)
        if k >= max_terms:
            raise ConvergenceError(
                f"series did not reach tol={tol:g} within {max_terms} terms (x={x!r})"
            )
        t = t_next
        wk = w_next


def _check_c(c):
    if not math.isfinite(c) or (c <= 0.0 and c == math.floor(c)):
        raise DomainError(f"c must not be a non-positive integer, got {c!r}")


def f21_series(a, b, c, x, tol=1e-12, max_terms=DEFAULT_MAX_TERMS):
    """2F1(a, b; c; x) by its power series with a certified tail bound."""
    a, b, c, x = float(a), float(b), float(c), float(x)
    _check_c(c)
    if not (0.0 <= x < 1.0):
        raise DomainError(f"f21_series needs 0 <= x < 1, got {x!r}")
    if not (1e-15 <= tol <= 1e-3):
        raise DomainError(f"tol must lie in [1e-15, 1e-3], got {tol!r}")
    if x == 0.0:
        return SeriesValue(1.0, 1, 0.0)
    res = ratio_series(1.0, (a, b), (c, 1.0), x, tol, absolute=True, max_terms=max_terms)
    return SeriesValue(res.s, res.terms, res.tail_s)


def f21_euler_integral(a, b, c, x):
    """2F1 through Euler's integral, as an oracle independent of the series.

    After t = sin^2(u) the integral becomes a Jacobi-weighted integral on
    [0, 1], which QUADPACK's QAWS routine handles including the algebraic
    endpoint singularities.
    """
    a, b, c, x = float(a), float(b), float(c), float(x)
    if not (c > b > 0.0):
        raise DomainError(f"Euler integral needs c > b > 0, got b={b!r}, c={c!r}")
    if not (0.0 <= x < 1.0):
        raise DomainError(f"Euler integral needs 0 <= x < 1, got {x!r}")
    if 2.0 * b - 1.0 < 0.0 or 2.0 * (c - b) - 1.0 < 0.0:
        warnings.warn(
            f"integrand singular at an endpoint (b={b}, c-b={c - b})",
            IntegrandSingularityWarning,
            stacklevel=2,
        )
    if x == 0.0:
        return 1.0
    val, _err = integrate.quad(
        lambda t: (1.0 - x * t) ** (-a),
        0.0,
        1.0,
        weight="alg",
        wvar=(b - 1.0, c - b - 1.0),
        epsabs=1e-14,
        epsrel=1e-13,
        limit=200,
    )
    return val / beta(b, c - b)


def _log_abs_gamma(x):
    # (log|Gamma(x)|, sign) for any real non-pole x
    if x > 0.0:
        return log_gamma(x), 1.0
    if x == math.floor(x):
        raise ZeroDivisionError("pole of gamma")
    s = math.sin(math.pi * x)
    lg, _ = _log_abs_gamma(1.0 - x)
    return math.log(math.pi / abs(s)) - lg, math.copysign(1.0, s)


def f21_at_one(a, b, c):
    """Gauss summation 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))."""
    a, b, c = float(a), float(b), float(c)
    _check_c(c)
    if not a + b < c:
        raise DomainError(f"Gauss summation needs a + b < c, got a+b={a + b!r}, c={c!r}")
    if a == 0.0 or b == 0.0:
        return 1.0
    lc, sc = _log_abs_gamma(c)
    lcab, scab = _log_abs_gamma(c - a - b)
    try:
        lca, sca = _log_abs_gamma(c - a)
        lcb, scb = _log_abs_gamma(c - b)
    except ZeroDivisionError:
        return 0.0
    return sc * scab * sca * scb * math.exp(lc + lcab - lca - lcb)


def zero_balanced_asymptote(a, b, x):
    """Leading behaviour -log(1 - x) / B(a, b) of F(a, b; a + b; x) as x -> 1."""
    a, b, x = float(a), float(b), float(x)
    if not (a > 0.0 and b > 0.0):
        raise DomainError("zero-balanced asymptote needs a, b > 0")
    if not (0.0 < x < 1.0):
        raise DomainError(f"zero-balanced asymptote needs 0 < x < 1, got {x!r}")
    return -math.log1p(-x) / beta(a, b)


def agm_complete_elliptic(r):
    """Classical complete elliptic integrals (K(r), E(r)) by the AGM."""
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"agm_complete_elliptic needs 0 <= r < 1, got {r!r}")
    an = 1.0
    bn = math.sqrt((1.0 - r) * (1.0 + r))
    cn = r
    acc = 0.5 * cn * cn
    power = 0.5
    for _ in range(64):
        if cn <= 1e-17 * an:
            break
        an, bn, cn = 0.5 * (an + bn), math.sqrt(an * bn), 0.5 * (an - bn)
        power *= 2.0
        acc += power * cn * cn
    k = math.pi / (2.0 * an)
    return k, k * (1.0 - acc)
