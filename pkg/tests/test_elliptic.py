import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypmono import DomainError, IntegrandSingularityWarning, E_a, E_a_prime, EllipticPoint, K_a, K_a_prime, agm_complete_elliptic, f21_euler_integral

HALF_PI = math.pi / 2


def test_point_invariants():
    p = EllipticPoint(0.3, 0.6)
    assert abs(p.r**2 + p.r_prime**2 - 1) <= 1e-15
    assert EllipticPoint(0.3, 1.0).r_prime == 0.0
    for a, r in ((0.0, 0.5), (1.0, 0.5), (0.5, 1.2), (0.5, -0.1)):
        with pytest.raises(DomainError):
            EllipticPoint(a, r)


def test_values_at_origin_and_one():
    for a in (0.1, 0.5, 0.9):
        assert K_a(a, 0) == HALF_PI
        assert E_a(a, 0) == HALF_PI
        assert K_a(a, 1) == math.inf
        assert E_a_prime(a, 1) == HALF_PI
        assert K_a_prime(a, 0) == math.inf
    assert abs(E_a(1 / 3, 1) - 3 * math.sqrt(3) / 8) <= 1e-15


def test_classical_points():
    s = 1 / math.sqrt(2)
    assert abs(K_a(0.5, s) - 1.8540746773) <= 1e-9
    assert abs(K_a_prime(0.5, s) - 1.8540746773) <= 1e-9
    assert abs(E_a(0.5, 0.6) - 1.4180833944) <= 1e-9


def test_euler_cross_check():
    with pytest.warns(IntegrandSingularityWarning):
        want = HALF_PI * f21_euler_integral(0.3, 0.7, 1.0, 0.25)
    assert abs(K_a(0.3, 0.5) - want) <= 1e-10


def test_half_matches_agm():
    for k in range(1, 10):
        r = k / 10
        kk, ee = agm_complete_elliptic(r)
        assert abs(K_a(0.5, r) - kk) <= 1e-11 * kk
        assert abs(E_a(0.5, r) - ee) <= 1e-11 * ee


def test_near_one_against_mpmath():
    for a in (0.05, 0.3, 0.5, 0.8):
        for r in (0.9, 0.99, 0.999999, 1 - 1e-12):
            x = r * r
            kk = float(mp.pi / 2 * mp.hyp2f1(a, 1 - a, 1, x))
            ee = float(mp.pi / 2 * mp.hyp2f1(a - 1, 1 - a, 1, x))
            assert abs(K_a(a, r) - kk) <= 1e-12 * kk
            assert abs(E_a(a, r) - ee) <= 1e-12 * ee


@given(st.floats(0.01, 0.99), st.floats(1e-3, 0.999))
def test_bracketing_pi_over_two(a, r):
    assert K_a(a, r) > HALF_PI
    assert E_a(a, r) < HALF_PI


@given(st.floats(0.01, 0.49), st.floats(0.01, 0.5), st.floats(0.05, 0.99))
def test_increasing_in_parameter(a, gap, r):
    b = min(a + gap, 0.5)
    if b - a < 1e-6:
        return
    assert K_a(a, r) < K_a(b, r)
