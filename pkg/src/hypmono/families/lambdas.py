"""The endpoint functions lambda_1 .. lambda_10 of the parameter a."""

import math

from ..errors import DomainError
from ..specialfn import digamma, log_gamma
from .sequences import check_ac, scaled_a_diff

# values as a -> 0+ (independent of c, and of n for 8..10)
A_ZERO_LIMITS = {1: 0.0, 2: 1.0, 3: 1.0, 4: 0.0, 5: 0.0, 6: 1.0, 7: 1.0, 8: 1.0, 9: 2.0, 10: 2.0}


def _cot_term(a):
    # pi a cot(pi a); cos(pi a) written as sin(pi (1/2 - a)) so a = 1/2 gives 0
    if a == 0.5:
        return 0.0
    return math.pi * a * math.sin(math.pi * (0.5 - a)) / math.sin(math.pi * a)


def _sin_minus_x(x):
    if abs(x) > 0.5:
        return math.sin(x) - x
    x2 = x * x
    term = -x * x2 / 6.0
    acc = 0.0
    k = 1
    while abs(term) > 1e-18 * abs(acc) or acc == 0.0:
        acc += term
        term *= -x2 / ((2 * k + 2) * (2 * k + 3))
        k += 1
        if term == 0.0:
            break
    return acc


def _lambda10(a, n):
    pa = math.pi * a
    # sums over k = 1..n of g_6 and g_6' weighted by 1 / ((k + 1) k!^2)
    core = 0.0       # (a + 1, k - 1)(1 - a, k) / ((k + 1) k!^2) = g6_k / a^2 / ...
    dsum = 0.0       # g6'_k / ((k + 1) k!^2)
    prod = 1.0       # (a + 1, k - 1)(1 - a, k) / (k!)^2
    for k in range(1, n + 1):
        if k == 1:
            prod = (1.0 - a)
        else:
            prod *= (a + k - 1.0) * (1.0 - a + k - 1.0) / (k * k)
        core += prod / (k + 1.0)
        # g6'_k = (a, k)(1 - a, k) (1 + a (a_k - a_0)) and (a, k) = a (a + 1, k - 1)
        dsum += a * prod * (1.0 + scaled_a_diff(k, a, 1.0)) / (k + 1.0)
    smx = _sin_minus_x(pa)
    den = smx / (a * a) + math.pi - math.pi * (1.0 - a) * core
    cos_m1 = -2.0 * math.sin(0.5 * pa) ** 2
    num = smx + math.pi * (1.0 - a) * cos_m1 + pa * (2.0 - a) - math.pi * (1.0 - a) ** 2 * dsum
    return num / ((1.0 - a) * a * den)


def lambda_fn(i, a, c=1.0, n=None):
    """lambda_i(a) for i = 1..10; i >= 7 use c = 1 and i >= 8 need ``n``."""
    if i not in range(1, 11):
        raise DomainError(f"lambda index must be 1..10, got {i!r}")
    a = float(a)
    if i >= 7:
        if c not in (None, 1, 1.0):
            raise DomainError(f"lambda_{i} is defined with c = 1, got c={c!r}")
        c = 1.0
        if i >= 8:
            if n is None or n < 0 or int(n) != n:
                raise DomainError(f"lambda_{i} needs a nonnegative integer n, got {n!r}")
            n = int(n)
    c = float(c)
    check_ac(a, c)
    if i == 1:
        return a / (a - c)
    if i == 2:
        return (c - 2.0 * a) / (c - a)
    if i == 3:
        # a psi(a) = a psi(1 + a) - 1
        return 1.0 + a * (digamma(c - a) - digamma(1.0 + a))
    if i == 4:
        if a == 1.0:
            raise DomainError("lambda_4 has a pole at a = 1")
        return a * (2.0 * a - c - 1.0) / ((c - a) * (1.0 - a))
    if i == 5:
        if a == 1.0:
            raise DomainError("lambda_5 has a pole at a = 1")
        num = 1.0 + a * (digamma(c + 1.0 - a) - digamma(1.0 + a))
        one_minus_p2 = -math.expm1(log_gamma(a) + log_gamma(c + 1.0 - a) - log_gamma(c))
        return num / one_minus_p2
    if i == 6:
        return 1.0 + a * (digamma(c + 1.0 - a) - digamma(1.0 + a))
    if i == 7:
        return _cot_term(a)
    if i == 8:
        return a * (digamma(n + 1.0 + a) - digamma(n + 3.0 - a)) + _cot_term(a)
    if i == 9:
        return 1.0 + a * (digamma(n + 1.0 + a) - digamma(n + 2.0 - a)) + _cot_term(a)
    return _lambda10(a, n)
