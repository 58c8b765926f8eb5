"""Suprema and infima of the lambda functions over a in (0, c/2].

A two-stage search: a 512-point pre-scan (geometric near zero, linear
further out) locates every local extremum, each one is refined by
golden-section search inside its certified bracket, and the best wins.
Extrema that the pre-scan places at its smallest point are reported as
boundary values through the analytic a -> 0+ limits.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from ..errors import ConvergenceError, DomainError
from ..families.lambdas import A_ZERO_LIMITS, lambda_fn

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
SMALLEST_A = 1e-8
MAX_GOLDEN_ITER = 500

# id -> (lambda index, "sup" | "inf", parameter kind)
THRESHOLD_IDS = {
    "lambda0": (6, "sup", None),
    "lambda1inf": (1, "inf", "c"),
    "lambda2inf": (2, "inf", "c"),
    "lambda3sup": (3, "sup", "c"),
    "lambda3star": (3, "sup", "c"),
    "lambda4inf": (4, "inf", "c"),
    "lambda5sup": (5, "sup", "c"),
    "lambda6sup": (6, "sup", "c"),
    "lambda7sup": (7, "sup", None),
    "lambda8inf": (8, "inf", "n"),
    "lambda9inf": (9, "inf", "n"),
    "lambda10bar": (10, "sup", "n"),
}


@dataclass(frozen=True)
class ThresholdEstimate:
    value: float
    arg_at_extremum: float
    bracket_width: float
    iterations: int
    attained_on_boundary: bool
    id: str = ""
    kind: str = "sup"
    c: float = 1.0
    n: int | None = None

    def as_dict(self):
        return {
            "id": self.id,
            "kind": self.kind,
            "c": self.c,
            "n": self.n,
            "value": self.value,
            "arg_at_extremum": self.arg_at_extremum,
            "bracket_width": self.bracket_width,
            "iterations": self.iterations,
            "attained_on_boundary": self.attained_on_boundary,
        }


def prescan_grid(half, points=512):
    """Half the points geometric from 1e-8, half linear up to ``half``."""
    m = points // 2
    split = 0.1 * half
    if split <= SMALLEST_A:
        split = half
    ratio = (split / SMALLEST_A) ** (1.0 / m)
    geo = [SMALLEST_A * ratio**k for k in range(m)]
    lin = [split + (half - split) * k / (points - m - 1) for k in range(points - m)]
    lin[-1] = half
    return geo + lin


def _golden_max(f, lo, hi, tol):
    """Maximise f on [lo, hi]; returns (argmax, value, width, iterations)."""
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while b - a > tol:
        if it >= MAX_GOLDEN_ITER:
            raise ConvergenceError(f"golden section stalled at width {b - a:g}")
        it += 1
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
        if x1 == x2 or not (a < x1 < b) or not (a < x2 < b):
            break
    best_x, best_f = (x1, f1) if f1 >= f2 else (x2, f2)
    for end in (lo, hi):
        if a <= end <= b:
            fe = f(end)
            if fe > best_f:
                best_x, best_f = end, fe
    return best_x, best_f, b - a, it


def solve_threshold(tid, c=None, n=None, tol=1e-10, points=512):
    """Locate the supremum or infimum named by ``tid``.

    ``c`` is needed by the ids of general-c functions (lambda3star needs
    c > 1), ``n`` by lambda8inf, lambda9inf and lambda10bar.
    """
    if tid not in THRESHOLD_IDS:
        raise DomainError(f"unknown threshold id {tid!r}")
    if not (1e-14 <= tol <= 1e-6):
        raise DomainError(f"tol must lie in [1e-14, 1e-6], got {tol!r}")
    idx, kind, param = THRESHOLD_IDS[tid]
    if param == "c":
        if c is None or not (math.isfinite(c) and c > 0.0):
            raise DomainError(f"{tid} needs c > 0")
        c = float(c)
        if tid == "lambda3star" and c <= 1.0:
            raise DomainError("lambda3star is defined for c > 1")
    else:
        if c not in (None, 1, 1.0):
            raise DomainError(f"{tid} is defined with c = 1")
        c = 1.0
    if param == "n":
        if n is None or n < 0 or int(n) != n:
            raise DomainError(f"{tid} needs a nonnegative integer n")
        n = int(n)
    else:
        n = None
    meta = dict(id=tid, kind=kind, c=c, n=n)

    # a = 1 is a pole of lambda_4 and lambda_5 once it lies in (0, c/2]
    if idx in (4, 5) and c >= 2.0:
        value = -math.inf if idx == 4 else math.inf
        return ThresholdEstimate(value, 1.0, 0.0, 0, False, **meta)

    sign = 1.0 if kind == "sup" else -1.0

    def obj(a):
        return sign * lambda_fn(idx, a, c, n)

    half = c / 2.0
    grid = prescan_grid(half, points)
    vals = [obj(a) for a in grid]
    best = max(range(len(grid)), key=vals.__getitem__)
    if best == 0:
        return ThresholdEstimate(A_ZERO_LIMITS[idx], 0.0, 0.0, 0, True, **meta)

    candidates = []
    last = len(grid) - 1
    for i in range(1, last + 1):
        left_ok = vals[i] >= vals[i - 1]
        right_ok = i == last or vals[i] >= vals[i + 1]
        if left_ok and right_ok:
            candidates.append(i)
    top = vals[best]
    results = []
    total_it = 0
    for i in candidates:
        # a local maximum far below the best cannot win after refinement
        if vals[i] < top - 1e-3 * max(1.0, abs(top)):
            continue
        lo = grid[i - 1]
        hi = grid[i + 1] if i < last else grid[i]
        xa, fa, width, it = _golden_max(obj, lo, hi, tol)
        total_it += it
        results.append((fa, xa, width))
    fa, xa, width = max(results)
    if abs(xa - half) <= tol:
        # extremum at the right end: report the exact endpoint value
        return ThresholdEstimate(sign * obj(half), half, 0.0, total_it, False, **meta)
    return ThresholdEstimate(sign * fa, xa, width, total_it, False, **meta)


@lru_cache(maxsize=4096)
def cached_threshold(tid, c=None, n=None, tol=1e-10):
    return solve_threshold(tid, c=c, n=n, tol=tol)


def lambda3star(c, tol=1e-10):
    """Per-c value of sup lambda_3 for c > 1."""
    return cached_threshold("lambda3star", float(c), None, tol).value


def lambda6bar(c, tol=1e-10):
    """sup of lambda_6 over (0, c/2] for fixed c."""
    return cached_threshold("lambda6sup", float(c), None, tol).value


def lambda3star_sweep(c_values, tol=1e-10):
    """lambda3star(c) over a set of c > 1, plus the largest value seen.

    The supremum over every c > 1 is not attained on any finite sweep;
    the returned maximum is only an estimate over the sampled range.
    """
    rows = [(float(c), solve_threshold("lambda3star", c=c, tol=tol)) for c in c_values]
    best = max(rows, key=lambda row: row[1].value)
    return rows, best
