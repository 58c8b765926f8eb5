"""Arbitrary-precision reference values for the family numerators (test oracle)."""

import mpmath as mp


def _F(a, b, c, x):
    return mp.hyp2f1(a, b, c, x)


def numerator(kind, a, c, arg, n=None):
    a, c, arg = mp.mpf(a), mp.mpf(c), mp.mpf(arg)
    hp = mp.pi / 2
    if kind in ("f1", "f2", "f3", "f4"):
        x = arg
        H0 = _F(a, c - a, c, x)
        H1 = _F(a - 1, c - a, c, x)
        return {"f1": H0 - 1, "f2": 1 - H1, "f3": H0 - H1, "f4": H1 - (1 - x) * H0}[kind]
    x = arg**2
    K = hp * _F(a, 1 - a, 1, x)
    E = hp * _F(a - 1, 1 - a, 1, x)
    if kind.startswith("phi") and kind[-1] in "1234":
        return {"phi1": K - hp, "phi2": hp - E, "phi3": K - E, "phi4": E - (1 - x) * K}[kind]
    if kind == "f7":
        kind, n = "f6", 0
    if kind == "f5":
        p5 = hp * sum(mp.rf(a, k) * mp.rf(1 - a, k + 1) / (mp.factorial(k) * mp.factorial(k + 1)) * x ** (k + 1)
                      for k in range(n + 1))
        return K - E - p5
    if kind == "f6":
        p6 = hp * sum(a * mp.rf(a, k) * mp.rf(1 - a, k) / (mp.factorial(k) * mp.factorial(k + 1)) * x ** (k + 1)
                      for k in range(n + 1))
        return E - (1 - x) * K - p6
    if kind == "phi5":
        return K - hp * sum(mp.rf(a, k) * mp.rf(1 - a, k) / mp.factorial(k) ** 2 * x**k for k in range(n + 1))
    if kind == "phi6":
        return hp * sum(mp.rf(a - 1, k) * mp.rf(1 - a, k) / mp.factorial(k) ** 2 * x**k for k in range(n + 1)) - E
    raise ValueError(kind)


def pair(kind, a, c, arg, n=None, dps=30):
    with mp.workdps(dps):
        val = numerator(kind, a, c, arg, n)
        der = mp.diff(lambda t: numerator(kind, t, c, arg, n), mp.mpf(a))
        return val, mp.mpf(a) * der
