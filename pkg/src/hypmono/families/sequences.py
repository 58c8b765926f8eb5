"""Digamma-difference sequences, the g-products and their log-derivatives."""

import math

from ..errors import DomainError
from ..specialfn import digamma, pochhammer


def check_ac(a, c):
    if not (math.isfinite(a) and math.isfinite(c)) or c <= 0.0:
        raise DomainError(f"c must be finite and > 0, got {c!r}")
    if not (0.0 < a <= c / 2.0):
        raise DomainError(f"a must lie in (0, c/2] = (0, {c / 2.0}], got {a!r}")


def _check_n(n):
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    return int(n)


def seq_a(n, a, c):
    """a_n = psi(n + a) - psi(n + c - a)."""
    n = _check_n(n)
    check_ac(a, c)
    return digamma(n + a) - digamma(n + c - a)


def seq_b(n, a, c):
    """b_n = psi(n + a) - psi(n + 1 + c - a) = a_n - c / (c - a + n)."""
    return seq_a(n, a, c) - c / (c - a + _check_n(n))


def scaled_a_diff(j, a, c):
    """a * (a_j - a_0) by telescoping, free of the 1/a blow-up of a_0.

    Tends to lambda_3 = a (psi(c - a) - psi(a)) as j grows.
    """
    if j == 0:
        return 0.0
    acc = (c - 2.0 * a) / (c - a)
    for i in range(1, j):
        acc += a * (c - 2.0 * a) / ((a + i) * (c - a + i))
    return acc


def _a_diff(j, a, c):
    # a_j - a_0, telescoped for modest j, digamma differences beyond
    if j <= 200:
        return scaled_a_diff(j, a, c) / a
    return seq_a(j, a, c) - seq_a(0, a, c)


def _resolve_c(i, c):
    if i in (5, 6):
        if c not in (None, 1, 1.0):
            raise DomainError(f"g_{i} is defined with c = 1, got c={c!r}")
        return 1.0
    if c is None:
        raise DomainError(f"g_{i} needs c")
    return float(c)


def g_seq(i, n, a, c=None):
    """The products g_{i,n}(a) for i = 1..6 (g_5, g_6 are g_1, g_4 at c = 1)."""
    if i not in range(1, 7):
        raise DomainError(f"g index must be 1..6, got {i!r}")
    n = _check_n(n)
    c = _resolve_c(i, c)
    check_ac(a, c)
    if i in (1, 5):
        return pochhammer(a, n) * pochhammer(c - a, n + 1)
    if i == 2:
        return pochhammer(a, n) * pochhammer(c - a, n)
    if i == 3:
        return (1.0 - a) * pochhammer(a, n) * pochhammer(c - a, n + 1)
    return a * pochhammer(a, n) * pochhammer(c - a, n)


def g_logderiv(i, n, a, c=None):
    """Closed-form g'_{i,n}(a) / g_{i,n}(a)."""
    if i not in range(1, 7):
        raise DomainError(f"g index must be 1..6, got {i!r}")
    n = _check_n(n)
    c = _resolve_c(i, c)
    check_ac(a, c)
    if i in (1, 5):
        return _a_diff(n + 1, a, c) - 1.0 / (n + a)
    if i == 2:
        return _a_diff(n, a, c)
    if i == 3:
        if a == 1.0:
            raise DomainError("g_3 vanishes at a = 1; its log-derivative is undefined")
        return _a_diff(n + 1, a, c) - 1.0 / (n + a) + 1.0 / (a - 1.0)
    return _a_diff(n, a, c) + 1.0 / a


def _coeff(base, a, n):
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not (0.0 <= a <= 1.0):
        raise DomainError(f"a must lie in [0, 1], got {a!r}")
    out = 1.0
    for k in range(int(n)):
        out *= (base + k) * (1.0 - a + k) / ((k + 1.0) * (k + 1.0))
    return out


def taylor_coeff_nu(a, n):
    """Coefficient of r^(2n) in F(a, 1 - a; 1; r^2)."""
    return _coeff(a, a, n)


def taylor_coeff_mu(a, n):
    """Coefficient of r^(2n) in F(a - 1, 1 - a; 1; r^2)."""
    return _coeff(a - 1.0, a, n)
