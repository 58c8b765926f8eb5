"""Generalized complete elliptic integrals K_a, E_a and their complements."""

import math
from dataclasses import dataclass, field

from .connection import endpoint_values
from .errors import DomainError
from .hyp2f1 import f21_series

HALF_PI = 0.5 * math.pi
# above this value of r^2 the connection formulas replace the power series
SERIES_CROSSOVER = 0.75


def complement(r):
    """r' = sqrt(1 - r^2), written to keep full accuracy for r near 1."""
    return math.sqrt((1.0 - r) * (1.0 + r))


@dataclass(frozen=True)
class EllipticPoint:
    a: float
    r: float
    r_prime: float = field(init=False)

    def __post_init__(self):
        if not (0.0 < self.a < 1.0):
            raise DomainError(f"a must lie in (0, 1), got {self.a!r}")
        if not (0.0 <= self.r <= 1.0):
            raise DomainError(f"r must lie in [0, 1], got {self.r!r}")
        object.__setattr__(self, "r_prime", complement(self.r))


def K_a(a, r, tol=1e-12):
    p = EllipticPoint(float(a), float(r))
    if p.r == 1.0:
        return math.inf
    x = p.r * p.r
    if x <= SERIES_CROSSOVER:
        return HALF_PI * f21_series(p.a, 1.0 - p.a, 1.0, x, tol).value
    return HALF_PI * endpoint_values(p.a, 1.0, p.r_prime**2).h0


def E_a(a, r, tol=1e-12):
    p = EllipticPoint(float(a), float(r))
    if p.r == 1.0:
        return math.sin(math.pi * p.a) / (2.0 * (1.0 - p.a))
    x = p.r * p.r
    if x <= SERIES_CROSSOVER:
        return HALF_PI * f21_series(p.a - 1.0, 1.0 - p.a, 1.0, x, tol).value
    return HALF_PI * endpoint_values(p.a, 1.0, p.r_prime**2).h1


def K_a_prime(a, r, tol=1e-12):
    return K_a(a, EllipticPoint(float(a), float(r)).r_prime, tol)


def E_a_prime(a, r, tol=1e-12):
    return E_a(a, EllipticPoint(float(a), float(r)).r_prime, tol)
