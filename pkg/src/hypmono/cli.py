"""Command-line front end: eval, threshold, scan and bounds.

Output is JSON (with a top-level ``schema`` version) or CSV with a fixed
header.  Exit codes: 0 success, 2 domain error, 3 non-convergence,
4 violated bound.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from . import elliptic, hyp2f1
from .analysis import (
    GridEvaluationError,
    INEQUALITIES,
    THRESHOLD_IDS,
    bound_suite,
    check_bounds,
    lambda3star_sweep,
    scan_monotonicity,
    solve_threshold,
    suite_points,
)
from .analysis.bounds import ELLIPTIC_INEQUALITIES
from .elliptic import EllipticPoint
from .errors import ConvergenceError, DomainError
from .families.series import R_FAMILIES
from .families import FAMILIES, RATIO_IDS, FamilyId, P_series, ParamPoint, family_eval, lambda_fn, ratio_fn

SCHEMA = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_VIOLATION = 4
DEFAULT_TOL = {"eval": 1e-12, "threshold": 1e-10, "scan": 1e-10, "bounds": 1e-9}
EVAL_FNS = ("2f1", "euler", "gauss", "ka", "ea", "ka-prime", "ea-prime", "agm",
            "family", "lambda", "p", "ratio")
SEED_MAX = 2**64 - 1


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "json"
    seed: int = 42
    tol: float = 1e-12
    out: str | None = None
    dump_grid: bool = False


def _need(params, *names):
    missing = [k for k in names if params.get(k) is None]
    if missing:
        raise DomainError("missing flag(s): " + ", ".join("--" + k.replace("_", "-") for k in missing))


def _finite(params, *names):
    for k in names:
        v = params.get(k)
        if v is not None and not math.isfinite(v):
            raise DomainError(f"--{k} must be finite, got {v!r}")


def validate(cfg):
    """Check flags against the target operation before anything runs."""
    p = cfg.params
    if cfg.output_format not in ("json", "csv"):
        raise DomainError("format must be json or csv")
    if not (0 <= cfg.seed <= SEED_MAX):
        raise DomainError("seed must be a 64-bit unsigned integer")
    if not (math.isfinite(cfg.tol) and cfg.tol > 0.0):
        raise DomainError("tol must be positive")
    _finite(p, "a", "b", "c", "x", "r", "lam")
    cmd = cfg.command
    if cmd == "eval":
        fn = p["fn"]
        if fn in ("2f1", "euler"):
            _need(p, "a", "b", "c", "x")
        elif fn == "gauss":
            _need(p, "a", "b", "c")
        elif fn in ("ka", "ea", "ka-prime", "ea-prime"):
            _need(p, "a", "r")
        elif fn == "agm":
            _need(p, "r")
        elif fn == "family":
            _need(p, "family", "a")
            FamilyId(p["family"], p["lam"] or 0.0, p.get("n"))
            _need(p, "r" if p["family"] in R_FAMILIES else "x")
        elif fn == "lambda":
            _need(p, "i", "a")
        elif fn == "p":
            _need(p, "i")
            _need(p, "x" if p["i"] <= 4 else "r")
        elif fn == "ratio":
            _need(p, "id", "a")
            if p["id"] not in RATIO_IDS:
                raise DomainError(f"unknown ratio id {p['id']!r}")
            _need(p, "r" if p["id"] in ("G1", "G2") else "x")
    elif cmd == "threshold":
        if p["id"] not in THRESHOLD_IDS:
            raise DomainError(f"unknown threshold id {p['id']!r}")
        if not (1e-14 <= cfg.tol <= 1e-6):
            raise DomainError("threshold tol must lie in [1e-14, 1e-6]")
        if p.get("sweep") is not None and (p["id"] != "lambda3star" or not p["sweep"] > 1.0):
            raise DomainError("--sweep takes C_MAX > 1 and applies to lambda3star only")
        if p["sweep_points"] < 1:
            raise DomainError("--sweep-points must be positive")
    elif cmd == "scan":
        fid = FamilyId(p["family"], p["lam"], p.get("n"))
        if fid.uses_r and p.get("c") not in (None, 1.0):
            raise DomainError(f"{fid.id} is defined with c = 1")
        for key in ("arg_grid", "a_grid"):
            if isinstance(p[key], int) and p[key] < 1:
                raise DomainError("grid sizes must be positive")
    elif cmd == "bounds":
        if p["samples"] < 1:
            raise DomainError("samples must be positive")
        if p["ineq"] in ELLIPTIC_INEQUALITIES:
            if p.get("c") not in (None, 1.0):
                raise DomainError(f"{p['ineq']} is defined with c = 1")
            if p.get("a") is not None and not (0.0 < p["a"] <= 0.5):
                raise DomainError("a must lie in (0, 1/2]")
            if p.get("r") is not None and not (0.0 < p["r"] < 1.0):
                raise DomainError("r must lie in (0, 1)")
        else:
            c = p.get("c")
            if c is not None and not c > 0.0:
                raise DomainError("c must be > 0")
            if p["ineq"] == "th2" and c is not None and not c < 2.0:
                raise DomainError("th2 needs c in (0, 2)")
            if p.get("a") is not None:
                _need(p, "c")
                ParamPoint(p["a"], c, 0.5)
            if p.get("x") is not None and not (0.0 < p["x"] < 1.0):
                raise DomainError("x must lie in (0, 1)")
    return cfg


# ------------------------------------------------------------------ commands

def cmd_eval(cfg):
    p, tol = cfg.params, cfg.tol
    fn = p["fn"]
    out = {"fn": fn}
    if fn == "2f1":
        res = hyp2f1.f21_series(p["a"], p["b"], p["c"], p["x"], tol)
        out.update(value=res.value, terms_used=res.terms_used, tail_bound=res.tail_bound)
    elif fn == "euler":
        out["value"] = hyp2f1.f21_euler_integral(p["a"], p["b"], p["c"], p["x"])
    elif fn == "gauss":
        out["value"] = hyp2f1.f21_at_one(p["a"], p["b"], p["c"])
    elif fn == "agm":
        k, e = hyp2f1.agm_complete_elliptic(p["r"])
        out.update(value=k, K=k, E=e)
    elif fn in ("ka", "ea", "ka-prime", "ea-prime"):
        f = {"ka": elliptic.K_a, "ea": elliptic.E_a,
             "ka-prime": elliptic.K_a_prime, "ea-prime": elliptic.E_a_prime}[fn]
        out["value"] = f(p["a"], p["r"], tol)
    elif fn == "family":
        fid = FamilyId(p["family"], p["lam"] or 0.0, p.get("n"))
        arg = p["r"] if fid.uses_r else p["x"]
        c = 1.0 if fid.uses_r else p.get("c")
        if c is None:
            raise DomainError("missing flag(s): --c")
        out.update(family=fid.id, value=family_eval(fid, p["a"], c, arg, tol))
    elif fn == "lambda":
        out["value"] = lambda_fn(p["i"], p["a"], 1.0 if p.get("c") is None else p["c"], p.get("n"))
    elif fn == "p":
        i = p["i"]
        if i <= 4:
            res = P_series(i, p["lam"] or 0.0, p.get("c"), p["x"], tol=tol)
        else:
            res = P_series(i, arg=p["r"], n=p.get("n"), tol=tol, a=p.get("a") or 0.5)
        out.update(value=res.value, terms_used=res.terms_used, tail_bound=res.tail_bound)
    else:
        rid = p["id"]
        arg = p["r"] if rid in ("G1", "G2") else p["x"]
        c = 1.0 if p.get("c") is None else p["c"]
        out.update(id=rid, value=ratio_fn(rid, p["a"], c, arg, p.get("n"), tol))
    return out, [out], 0


def cmd_threshold(cfg):
    p = cfg.params
    if p.get("sweep") is not None:
        count = p["sweep_points"]
        c_max = p["sweep"]
        cs = [1.0 + (c_max - 1.0) * (k + 1) / count for k in range(count)]
        rows, best = lambda3star_sweep(cs, cfg.tol)
        table = [est.as_dict() for _, est in rows]
        out = {"id": "lambda3star", "sweep": {"c_max": c_max, "points": count},
               "rows": table, "observed_max": best[1].as_dict(),
               "note": "estimate over the sampled c range only"}
        return out, table, 0
    est = solve_threshold(p["id"], c=p.get("c"), n=p.get("n"), tol=cfg.tol)
    d = est.as_dict()
    return d, [d], 0


def cmd_scan(cfg):
    p = cfg.params
    fid = FamilyId(p["family"], p["lam"], p.get("n"))
    c = 1.0 if p.get("c") is None else p["c"]
    rep = scan_monotonicity(fid, c, p["arg_grid"], p["a_grid"], p["method"], cfg.tol,
                            keep_grid=cfg.dump_grid)
    d = rep.as_dict()
    if cfg.dump_grid:
        rows = [{"a": a, "arg": t, "value": s} for a, t, s in rep.grid]
        d["grid"] = [[a, t, s] for a, t, s in rep.grid]
        return d, rows, 0
    flat = dict(d)
    flat["location"] = " ".join(repr(v) for v in d["location"])
    return d, [flat], 0


def _bounds_points(cfg):
    p = cfg.params
    iid = p["ineq"]
    pts = suite_points(iid, p["samples"], cfg.seed, p.get("n"))
    out = []
    for pt, n in pts:
        if iid in ELLIPTIC_INEQUALITIES:
            a = pt.a if p.get("a") is None else p["a"]
            r = pt.r if p.get("r") is None else p["r"]
            out.append((EllipticPoint(a, r), n))
        else:
            c = pt.c if p.get("c") is None else p["c"]
            a = (pt.a / (0.5 * pt.c)) * 0.5 * c if p.get("a") is None else p["a"]
            x = pt.x if p.get("x") is None else p["x"]
            out.append((ParamPoint(a, c, x), None))
    return out


def cmd_bounds(cfg):
    p = cfg.params
    iid = p["ineq"]
    fixed = any(p.get(k) is not None for k in ("a", "c", "x", "r"))
    if fixed:
        reports = [check_bounds(iid, pt, cfg.tol, n=n) for pt, n in _bounds_points(cfg)]
        worst = min(reports, key=lambda rep: rep.min_slack)
    else:
        reports, worst = bound_suite(iid, p["samples"], cfg.seed, cfg.tol, p.get("n"))
    rows = [r.as_dict() for r in reports]
    violations = sum(not r.holds(cfg.tol) for r in reports)
    summary = {"inequality_id": iid, "count": len(reports), "violations": violations,
               "min_slack": worst.min_slack, "worst": worst.as_dict(), "tol": cfg.tol,
               "seed": cfg.seed}
    out = {"summary": summary, "reports": rows}
    return out, rows, EXIT_VIOLATION if violations else 0


COMMANDS = {"eval": cmd_eval, "threshold": cmd_threshold, "scan": cmd_scan, "bounds": cmd_bounds}


# ------------------------------------------------------------------ output

def _clean(obj):
    # JSON has no inf/nan; spell them as strings
    if isinstance(obj, float) and not math.isfinite(obj):
        return "nan" if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def render(cfg, payload, rows):
    if cfg.output_format == "json":
        doc = {"schema": SCHEMA, "command": cfg.command}
        doc.update(payload)
        return json.dumps(_clean(doc), indent=2) + "\n"
    buf = io.StringIO()
    header = list(rows[0].keys()) if rows else []
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    return buf.getvalue()


def _error(kind, exc):
    doc = {"schema": SCHEMA, "error": {"type": kind, "message": str(exc)}}
    sys.stderr.write(json.dumps(doc) + "\n")


# ------------------------------------------------------------------ parser

def _grid(text):
    if "," not in text:
        return int(text)
    return [float(v) for v in text.split(",") if v.strip()]


def build_parser():
    parser = argparse.ArgumentParser(prog="hypmono", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write output to FILE instead of stdout")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--tol", type=float, help="tolerance (default depends on command)")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate one function")
    ev.add_argument("--fn", choices=EVAL_FNS, required=True)
    ev.add_argument("--family", choices=FAMILIES)
    ev.add_argument("--id", choices=RATIO_IDS)
    for name in ("a", "b", "c", "x", "r"):
        ev.add_argument("--" + name, type=float)
    ev.add_argument("--lambda", dest="lam", type=float)
    ev.add_argument("--i", type=int)
    ev.add_argument("--n", type=int)

    th = sub.add_parser("threshold", parents=[common], help="solve for a lambda threshold")
    th.add_argument("--id", choices=sorted(THRESHOLD_IDS), required=True)
    th.add_argument("--c", type=float)
    th.add_argument("--n", type=int)
    th.add_argument("--sweep", type=float, metavar="C_MAX",
                    help="lambda3star only: sweep c over (1, C_MAX]")
    th.add_argument("--sweep-points", type=int, default=40)

    sc = sub.add_parser("scan", parents=[common], help="monotonicity grid scan")
    sc.add_argument("--family", choices=FAMILIES, required=True)
    sc.add_argument("--lambda", dest="lam", type=float, default=0.0)
    sc.add_argument("--c", type=float)
    sc.add_argument("--n", type=int)
    sc.add_argument("--x-grid", "--r-grid", dest="arg_grid", type=_grid, default=32,
                    help="point count or comma-separated values")
    sc.add_argument("--a-grid", type=_grid, default=128,
                    help="point count or comma-separated values")
    sc.add_argument("--method", choices=("ratio", "finite_difference"), default="ratio")
    sc.add_argument("--dump-grid", action="store_true")

    bd = sub.add_parser("bounds", parents=[common], help="check a two-sided inequality")
    bd.add_argument("--ineq", choices=INEQUALITIES, required=True)
    bd.add_argument("--samples", type=int, default=1000)
    bd.add_argument("--n", type=int)
    for name in ("a", "c", "x", "r"):
        bd.add_argument("--" + name, type=float, help=f"fix {name} instead of sampling it")
    return parser


def config_from_args(ns):
    params = {k: v for k, v in vars(ns).items()
              if k not in ("command", "format", "out", "seed", "tol", "dump_grid")}
    tol = DEFAULT_TOL[ns.command] if ns.tol is None else ns.tol
    return RunConfig(ns.command, params, ns.format, ns.seed, tol, ns.out,
                     getattr(ns, "dump_grid", False))


def main(argv=None):
    ns = build_parser().parse_args(argv)
    try:
        cfg = validate(config_from_args(ns))
        payload, rows, code = COMMANDS[cfg.command](cfg)
    except DomainError as exc:
        _error("domain_error", exc)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        _error("convergence_error", exc)
        return EXIT_CONVERGENCE
    except GridEvaluationError as exc:
        if isinstance(exc.cause, ConvergenceError):
            _error("convergence_error", exc)
            return EXIT_CONVERGENCE
        _error("domain_error", exc)
        return EXIT_DOMAIN
    text = render(cfg, payload, rows)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
