"""Scalar gamma-family kernels for real positive arguments.

All functions are pure and operate on Python floats.  The gamma function
uses the Lanczos approximation with g = 7 and nine coefficients (the set
published in Numerical Recipes, 3rd ed., and reproduced on Wikipedia);
log-gamma switches to the Stirling series for large arguments and digamma
uses upward recurrence followed by the asymptotic expansion.
"""

import math
from fractions import Fraction

from .errors import DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# Largest x with a finite double gamma(x).
_GAMMA_MAX = 171.6243769563027

# Stirling correction coefficients B_{2k} / (2k (2k-1)), k = 1..7.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
)

# B_{2k} / (2k), k = 1..7, for the digamma asymptotic series.
_DIGAMMA_ASYMP = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# B_{2k}, k = 1..7, for the trigamma asymptotic series.
_TRIGAMMA_ASYMP = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def _check_positive(name, x):
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} requires a finite argument > 0, got {x!r}")


def _lanczos_gamma(x):
    # valid for x >= 0.5
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    # split the power so t**(z+0.5) cannot overflow before exp(-t) is applied
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * half * (half * math.exp(-t)) * acc


def gamma(x):
    """Euler gamma function for real ``x > 0``.

    Raises :class:`DomainError` for non-positive or non-finite input and
    :class:`OverflowError` once the result exceeds the double range.
    """
    x = float(x)
    _check_positive("gamma", x)
    if x > _GAMMA_MAX:
        raise OverflowError(f"gamma({x!r}) overflows a double")
    if x < 0.5:
        return _lanczos_gamma(x + 1.0) / x
    if x < 15.0:
        return _lanczos_gamma(x)
    # Stirling with the power split in two; every factor is accurate to an ulp
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for coef in reversed(_STIRLING):
        corr = corr * inv2 + coef
    half = x ** (0.5 * (x - 0.5))
    return _SQRT_2PI * half * (half * math.exp(-x)) * math.exp(corr * inv)


def log_gamma(x):
    """Natural logarithm of gamma for real ``x > 0``; stable up to 1e300."""
    x = float(x)
    _check_positive("log_gamma", x)
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    if x < 15.0:
        return math.log(_lanczos_gamma(x))
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for coef in reversed(_STIRLING):
        corr = corr * inv2 + coef
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + corr * inv


def digamma(x):
    """Logarithmic derivative of gamma for real ``x > 0``.

    Small arguments are shifted upward with psi(x) = psi(x + 1) - 1/x;
    the dominant -1/x term is added last so that a * psi(a) -> -1 stays
    accurate as a -> 0+.
    """
    x = float(x)
    _check_positive("digamma", x)
    if x < 1.0:
        # exact rational 1/x so the dominant term is rounded only once
        return float(Fraction(digamma(x + 1.0)) - 1 / Fraction(x))
    shift = 0.0
    while x < 10.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    for coef in reversed(_DIGAMMA_ASYMP):
        tail = tail * inv2 + coef
    return math.log(x) - 0.5 / x - tail * inv2 + shift


def trigamma(x):
    """Derivative of digamma for real ``x > 0`` (internal helper)."""
    x = float(x)
    _check_positive("trigamma", x)
    acc = 0.0
    while x < 10.0:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = 0.0
    for coef in reversed(_TRIGAMMA_ASYMP):
        tail = tail * inv2 + coef
    return acc + inv + 0.5 * inv2 + tail * inv2 * inv


def beta(x, y):
    """Euler beta function B(x, y) = gamma(x) gamma(y) / gamma(x + y)."""
    x = float(x)
    y = float(y)
    _check_positive("beta", x)
    _check_positive("beta", y)
    if x + y < _GAMMA_MAX and min(x, y) > 1e-3:
        return gamma(x) * gamma(y) / gamma(x + y)
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


def pochhammer(a, n):
    """Rising factorial (a, n) = a (a+1) ... (a+n-1), with (a, 0) = 1.

    ``a`` may be any real number; negative and zero bases are evaluated by
    the literal product.  (0, 0) is returned as 1.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer requires a nonnegative integer n, got {n!r}")
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"pochhammer requires a finite base, got {a!r}")
    prod = 1.0
    for k in range(int(n)):
        prod *= a + k
        if prod == 0.0:
            return 0.0
    if not math.isfinite(prod):
        raise OverflowError(f"pochhammer({a!r}, {n}) overflows a double")
    return prod
