"""Acceptance checks, one per criterion.

Each test prints a single ``CRITERION k: PASS|FAIL ...`` line and then
asserts.  Run directly (``python tests/test_acceptance.py``) for just the
summary lines.
"""

import contextlib
import io
import json
import math
import random
import sys
import time
import warnings

import pytest

from hypmono import IntegrandSingularityWarning, E_a, EllipticPoint, K_a, agm_complete_elliptic, f21_euler_integral, f21_series
from hypmono.analysis import bound_suite, check_bounds, scan_monotonicity, solve_threshold
from hypmono.cli import main
from hypmono.families import FamilyId, P_series, ParamPoint, family_eval, taylor_coeff_mu, taylor_coeff_nu


# collected for the terminal summary in conftest.py
SUMMARY = []


def _emit(k, ok, detail):
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    SUMMARY.append(line)
    print(line)
    return ok, detail


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


# ---------------------------------------------------------------- 1

def criterion_1():
    buf = io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(buf):
        code = main(["threshold", "--id", "lambda0", "--tol", "1e-12"])
    dt = time.perf_counter() - t0
    value = json.loads(buf.getvalue())["value"]
    ok = code == 0 and 1.118763390276 < value < 1.118763390286 and dt < 1.0
    return _emit(1, ok, f"lambda0={value!r} in {dt:.3f}s")


# ---------------------------------------------------------------- 2

def criterion_2():
    problems = []
    slowest = 0.0
    est, dt = _timed(solve_threshold, "lambda10bar", n=0)
    slowest = max(slowest, dt)
    if not (abs(est.value - 2.0) <= 1e-8 and est.attained_on_boundary):
        problems.append(f"lambda10bar(0)={est.value}")
    for n in range(6):
        est, dt = _timed(solve_threshold, "lambda8inf", n=n)
        slowest = max(slowest, dt)
        if not (abs(est.value + 1.0 / (2 * n + 3)) <= 1e-10 and est.arg_at_extremum == 0.5):
            problems.append(f"lambda8inf({n})={est.value} at a={est.arg_at_extremum}")
        est, dt = _timed(solve_threshold, "lambda9inf", n=n)
        slowest = max(slowest, dt)
        if not abs(est.value - 1.0) <= 1e-10:
            problems.append(f"lambda9inf({n})={est.value}")
    if slowest >= 1.0:
        problems.append(f"slowest solve {slowest:.2f}s")
    ok = not problems
    return _emit(2, ok, "; ".join(problems) or f"all 13 values, slowest {slowest:.3f}s")


# ---------------------------------------------------------------- 3

def criterion_3():
    problems = []
    for c in (0.3, 0.7, 1.0):
        est = solve_threshold("lambda3sup", c=c)
        if not (est.value == 1.0 and est.attained_on_boundary):
            problems.append(f"lambda3sup(c={c})={est.value}")
    for c in (0.5, 1.0, 1.5):
        est = solve_threshold("lambda4inf", c=c)
        if not (abs(est.value - 2.0 / (c - 2.0)) <= 1e-10 and est.arg_at_extremum == c / 2):
            problems.append(f"lambda4inf(c={c})={est.value}")
        est = solve_threshold("lambda5sup", c=c)
        if not (est.value == 0.0 and est.attained_on_boundary):
            problems.append(f"lambda5sup(c={c})={est.value}")
        for tid, want in (("lambda1inf", -1.0), ("lambda2inf", 0.0)):
            est = solve_threshold(tid, c=c)
            if not (est.value == want and est.arg_at_extremum == c / 2):
                problems.append(f"{tid}(c={c})={est.value} at a={est.arg_at_extremum}")
    gap = abs(solve_threshold("lambda3star", c=2.0).value - solve_threshold("lambda0").value)
    if not gap <= 1e-10:
        problems.append(f"|lambda3star(2)-lambda0|={gap:.2e}")
    return _emit(3, not problems, "; ".join(problems) or f"all limits exact, lambda3star(2) gap {gap:.1e}")


# ---------------------------------------------------------------- 4

def criterion_4():
    rng = random.Random(2024)
    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrandSingularityWarning)
        for _ in range(200):
            c = rng.uniform(0.1, 5.0)
            b = rng.uniform(0.0, c)
            if b == 0.0:
                b = c / 2
            a = rng.uniform(-2.0, 3.0)
            x = rng.uniform(0.0, 0.95)
            s = f21_series(a, b, c, x).value
            worst = max(worst, abs(s - f21_euler_integral(a, b, c, x)) / (1.0 + abs(s)))
    agm_worst = 0.0
    for k in range(1, 10):
        r = k / 10
        kk, ee = agm_complete_elliptic(r)
        agm_worst = max(agm_worst, abs(K_a(0.5, r) - kk) / kk, abs(E_a(0.5, r) - ee) / ee)
    k_root = K_a(0.5, 1 / math.sqrt(2))
    ok = worst <= 1e-8 and agm_worst <= 1e-11 and abs(k_root - 1.8540746773) <= 1e-9
    return _emit(4, ok, f"series/euler {worst:.1e}, agm {agm_worst:.1e}, K(1/sqrt2)={k_root!r}")


# ---------------------------------------------------------------- 5

def _verdict_cases():
    # (family, lambda, c, n, expected verdict)
    cases = [
        ("f1", 0.0, 0.8, None, "increasing"),
        ("f1", 0.0, 1.5, None, "increasing"),
        ("f1", 1.0, 0.8, None, "decreasing"),
        ("f2", 2.0 / (1.0 - 2.0), 1.0, None, "increasing"),
        ("f2", 0.0, 1.0, None, "decreasing"),
    ]
    cases += [("f2", lam, 2.5, None, "non_monotone") for lam in (-5.0, -1.0, 0.0, 1.0, 5.0)]
    cases += [("f3", -1.0, c, None, "increasing") for c in (1.0, 1.5)]
    cases += [("f4", 1.0, c, None, "increasing") for c in (1.0, 1.5)]
    for n in (0, 1, 3):
        cases.append(("f5", -1.0 / (2 * n + 3), 1.0, n, "increasing"))
        cases.append(("f5", 1.0, 1.0, n, "decreasing"))
    cases += [("f6", 1.0, 1.0, n, "increasing") for n in (0, 2)]
    cases.append(("f7", 2.0, 1.0, None, "decreasing"))
    return cases


def criterion_5():
    t0 = time.perf_counter()
    wrong = []
    checked = 0
    for kind, lam, c, n, want in _verdict_cases():
        rep = scan_monotonicity(FamilyId(kind, lam, n), c)
        checked += 1
        if rep.verdict != want:
            wrong.append(f"{kind}(lam={lam:g}, c={c:g}, n={n}) -> {rep.verdict}, want {want}")
        if want == "non_monotone":
            continue
        step = 1e-2 if want == "increasing" else -1e-2
        rep = scan_monotonicity(FamilyId(kind, lam + step, n), c)
        checked += 1
        if rep.verdict != "non_monotone":
            wrong.append(f"{kind}(lam={lam + step:g}, c={c:g}, n={n}) -> {rep.verdict}, want non_monotone")
    dt = time.perf_counter() - t0
    if dt >= 60.0:
        wrong.append(f"runtime {dt:.1f}s")
    return _emit(5, not wrong, f"{checked} scans in {dt:.1f}s" + ("; " + "; ".join(wrong) if wrong else ""))


# ---------------------------------------------------------------- 6

# a -> 0 probes: which side of which inequality becomes tight there
ZERO_PROBES = (("th1", "upper"), ("th2", "lower"), ("th4", "lower"), ("th31", "upper"), ("cor33", "upper"))


def criterion_6():
    problems = []
    for iid in ("th1", "th2", "th3", "th4", "th31", "th32", "cor33"):
        reports, worst = bound_suite(iid, samples=1000, seed=42)
        bad = sum(not rep.holds(1e-9) for rep in reports)
        if bad:
            p = worst.point
            problems.append(f"{iid}: {bad}/1000 below -1e-9, min slack {worst.min_slack:.3g} "
                            f"at a={p.a:.4g} c={p.c:.4g} x={p.x:.6g}")
    for c in (0.4, 1.0, 1.7, 3.0):
        for x in (0.2, 0.6, 0.95):
            for iid in ("th1", "th2", "th3", "th4"):
                if iid == "th2" and c >= 2.0:
                    continue
                rep = check_bounds(iid, ParamPoint(c / 2, c, x))
                if max(abs(rep.lower_slack), abs(rep.upper_slack)) > 1e-6:
                    problems.append(f"{iid} not tight at a=c/2 (c={c}, x={x})")
    for r in (0.3, 0.8, 0.99):
        for iid, n in (("th31", 2), ("th32", 1), ("cor33", 0)):
            rep = check_bounds(iid, EllipticPoint(0.5, r), n=n)
            # cor33 is only tight from below at a = 1/2
            slack = abs(rep.lower_slack) if iid == "cor33" else max(abs(rep.lower_slack), abs(rep.upper_slack))
            if slack > 1e-6:
                problems.append(f"{iid} not tight at a=1/2 (r={r})")
    for iid, side in ZERO_PROBES:
        if iid in ("th31", "cor33"):
            rep = check_bounds(iid, EllipticPoint(1e-6, 0.7), n=1)
        else:
            rep = check_bounds(iid, ParamPoint(1e-6, 1.2, 0.7))
        slack = rep.upper_slack if side == "upper" else rep.lower_slack
        if abs(slack) > 1e-6:
            problems.append(f"{iid} {side} slack {slack:.2e} at a=1e-6")
    return _emit(6, not problems, "; ".join(problems) or "all suites hold, equality cases tight")


# ---------------------------------------------------------------- 7

def _pairs(rng, lo, hi, count=50):
    out = []
    while len(out) < count:
        a, b = sorted((rng.uniform(lo, hi), rng.uniform(lo, hi)))
        if a < b:
            out.append((a, b))
    return out


def criterion_7():
    rng = random.Random(11)
    bad = []
    for a, b in _pairs(rng, 0.0, 0.5):
        bad += [("nu+", a, b, n) for n in range(1, 101) if not taylor_coeff_nu(b, n) - taylor_coeff_nu(a, n) > 0]
    for a, b in _pairs(rng, 0.5, 1.0):
        bad += [("nu-", a, b, n) for n in range(1, 101) if not taylor_coeff_nu(b, n) - taylor_coeff_nu(a, n) < 0]
    for a, b in _pairs(rng, 0.5, 1.0):
        bad += [("mu+", a, b, n) for n in range(1, 101) if not taylor_coeff_mu(b, n) - taylor_coeff_mu(a, n) > 0]
    for a, b in _pairs(rng, 0.0, 1.0 - 1.0 / math.sqrt(2)):
        # the r^2 correction only touches n = 1, which cancels exactly
        bad += [("mu-", a, b, n) for n in range(2, 101) if not taylor_coeff_mu(b, n) - taylor_coeff_mu(a, n) < 0]
    detail = f"{len(bad)} sign failures" + (f", first {bad[0]}" if bad else " over 4 clauses x 50 pairs")
    return _emit(7, not bad, detail)


# ---------------------------------------------------------------- 8

def criterion_8():
    a = 1e-6
    rows = []
    for x in (0.1, 0.5, 0.9):
        for c in (0.7, 1.5):
            rows.append((f"f1,1 c={c} x={x}", family_eval(FamilyId("f1", 1.0), a, c, x), -math.log1p(-x)))
            rows.append((f"f3,0 c={c} x={x}", family_eval(FamilyId("f3", 0.0), a, c, x), x))
            rows.append((f"f4,1 c={c} x={x}", family_eval(FamilyId("f4", 1.0), a, c, x), x / c))
        rows.append((f"f2,0 x={x}", family_eval(FamilyId("f2", 0.0), a, 1.0, x), x))
    for r in (0.2, 0.6, 0.95):
        for n in (0, 1, 3):
            rows.append((f"f5,1 n={n} r={r}", family_eval(FamilyId("f5", 1.0, n), a, 1.0, r),
                         P_series(7, arg=r, n=n).value))
            rows.append((f"f6,2 n={n} r={r}", family_eval(FamilyId("f6", 2.0, n), a, 1.0, r),
                         P_series(8, arg=r, n=n).value))
    errs = [(abs(got - want) / abs(want), label) for label, got, want in rows]
    worst = max(errs)
    return _emit(8, worst[0] <= 1e-4, f"{len(rows)} limits, worst rel err {worst[0]:.1e} ({worst[1]})")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 9)])
def test_criterion(check):
    ok, detail = check()
    assert ok, detail


if __name__ == "__main__":
    results = [check()[0] for check in CRITERIA]
    sys.exit(0 if all(results) else 1)
