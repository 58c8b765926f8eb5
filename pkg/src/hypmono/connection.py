"""Zero-balanced 2F1 near x = 1 through the logarithmic connection formulas.

Two functions of the parameter a (c fixed) are covered,

    H0(a) = F(a, c - a; c; x)        (c - a - b = 0)
    H1(a) = F(a - 1, c - a; c; x)    (c - a - b = 1)

both expanded in powers of y = 1 - x with log(y) coefficients.  The module
returns the combinations used by the monotonicity families,

    d0 = H0 - 1,   d1 = 1 - H1,   n4 = H1 - y * H0,

together with their exact a-derivatives (digamma/trigamma closed forms, no
numerical differentiation).  The expansions converge like y**n, so they are
meant for x above roughly 0.7 where the direct series become slow.
"""

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .specialfn import EULER_GAMMA, digamma, log_gamma, trigamma

_PSI1 = -EULER_GAMMA
_PSI2 = 1.0 - EULER_GAMMA
_PSI3 = 1.5 - EULER_GAMMA


@dataclass(frozen=True)
class EndpointValues:
    d0: float
    d0p: float
    d1: float
    d1p: float
    n4: float
    n4p: float

    @property
    def h0(self):
        return 1.0 + self.d0

    @property
    def h1(self):
        return 1.0 - self.d1


def _log_sums(a, c, y, big_l, max_terms=10_000):
    """Sigma0, Sigma1 and their a-derivatives."""
    ca = c - a
    # n = 1 starting values
    v = ca
    dv = -1.0 / ca
    bet = 2.0 * _PSI2 - digamma(a + 1.0) - digamma(ca + 1.0)
    dbet = -trigamma(a + 1.0) + trigamma(ca + 1.0)
    u = 0.5 * (ca + 1.0)
    du = -1.0 / (ca + 1.0)
    tn = -big_l - _PSI2 - _PSI3 + digamma(a + 1.0) + digamma(ca + 2.0)
    dtn = trigamma(a + 1.0) - trigamma(ca + 2.0)

    s0 = s0p = s1 = s1p = 0.0
    yn = y
    for n in range(1, max_terms):
        e0 = v * (bet + big_l) * yn
        e0p = v * (dv * (bet + big_l) + dbet) * yn
        e1 = u * tn * yn
        e1p = u * (du * tn + dtn) * yn
        s0 += e0
        s0p += e0p
        s1 += e1
        s1p += e1p
        shrink = max((a + n) * (ca + n) / (n + 1.0) ** 2,
                     (a + n) * (ca + 1.0 + n) / ((n + 1.0) * (n + 2.0))) * y
        if n > 3 and shrink < 0.75:
            small = 1e-17
            if (abs(e0) <= small * abs(s0) and abs(e0p) <= small * abs(s0p)
                    and abs(e1) <= small * abs(s1) and abs(e1p) <= small * abs(s1p)):
                return s0, s0p, s1, s1p
        # advance n -> n + 1
        inv_a = 1.0 / (a + n)
        inv_ca = 1.0 / (ca + n)
        inv_ca1 = 1.0 / (ca + n + 1.0)
        v *= (a + n) * (ca + n) / (n + 1.0) ** 2
        dv += inv_a - inv_ca
        bet += 2.0 / (n + 1.0) - inv_a - inv_ca
        dbet += inv_a * inv_a - inv_ca * inv_ca
        u *= (a + n) * (ca + n + 1.0) / ((n + 1.0) * (n + 2.0))
        du += inv_a - inv_ca1
        tn += -1.0 / (n + 1.0) - 1.0 / (n + 2.0) + inv_a + inv_ca1
        dtn += -inv_a * inv_a + inv_ca1 * inv_ca1
        yn *= y
    raise ConvergenceError(f"connection series stalled at a={a}, c={c}, y={y}")


def endpoint_values(a, c, y):
    """d0, d1, n4 and their a-derivatives at parameter a, with y = 1 - x."""
    a, c, y = float(a), float(c), float(y)
    if not (0.0 < a < c):
        raise DomainError(f"connection formulas need 0 < a < c, got a={a}, c={c}")
    if not (0.0 < y < 1.0):
        raise DomainError(f"connection formulas need 0 < y < 1, got {y}")
    ca = c - a
    big_l = -math.log(y)
    rho = log_gamma(c) - log_gamma(1.0 + a) - log_gamma(ca)
    big_r = math.exp(rho)
    r_m1 = math.expm1(rho)
    psi_1a = digamma(1.0 + a)
    psi_ca = digamma(ca)
    tri_1a = trigamma(1.0 + a)
    tri_ca = trigamma(ca)
    tri_ca1 = tri_ca - 1.0 / (ca * ca)
    rp = big_r * (psi_ca - psi_1a)

    q = 2.0 * _PSI1 - psi_1a - psi_ca + big_l
    qp = -tri_1a + tri_ca
    t0 = -big_l - _PSI1 - _PSI2 + psi_1a + psi_ca + 1.0 / ca
    t0p = tri_1a - tri_ca1
    s0, s0p, s1, s1p = _log_sums(a, c, y, big_l)

    inner0 = q + a * s0
    d0 = r_m1 + a * big_r * inner0
    d0p = rp + (big_r + a * rp) * inner0 + a * big_r * (qp + s0 + a * s0p)

    a1 = a / ca + (1.0 - a) * y
    a1p = c / (ca * ca) - y
    b1 = t0 + a * s1
    b1p = t0p + s1 + a * s1p
    aa1 = a * (a - 1.0)
    d1 = 1.0 - big_r * a1 - aa1 * big_r * y * b1
    d1p = (-rp * a1 - big_r * a1p
           - y * ((2.0 * a - 1.0) * big_r * b1 + aa1 * rp * b1 + aa1 * big_r * b1p))

    m4 = 1.0 / ca - y * (1.0 + q + (1.0 - a) * t0) + a * y * ((a - 1.0) * s1 - s0)
    m4p = (1.0 / (ca * ca) - y * (qp - t0 + (1.0 - a) * t0p)
           + y * ((a - 1.0) * s1 - s0)
           + a * y * (s1 + (a - 1.0) * s1p - s0p))
    n4 = a * big_r * m4
    n4p = (big_r + a * rp) * m4 + a * big_r * m4p
    return EndpointValues(d0, d0p, d1, d1p, n4, n4p)
