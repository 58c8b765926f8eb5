"""Run every two-sided bound on seeded quasi-random points and summarise slacks."""

import argparse
from dataclasses import asdict, dataclass

from hypmono.analysis import INEQUALITIES, bound_suite


@dataclass
class Config:
    samples: int = 1000
    seed: int = 42
    tol: float = 1e-9
    th4_exponent: str = "lambda6bar"


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(cfg).items():
        ap.add_argument("--" + k.replace("_", "-"), type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))

    for iid in INEQUALITIES:
        kw = {"th4_exponent": cfg.th4_exponent} if iid == "th4" else {}
        reports, worst = bound_suite(iid, cfg.samples, cfg.seed, cfg.tol, **kw)
        bad = [r for r in reports if not r.holds(cfg.tol)]
        line = f"{iid:6s} violations={len(bad):4d}/{len(reports)}  min slack={worst.min_slack:+.3e}"
        if bad:
            d = worst.as_dict()
            where = {k: d[k] for k in ("a", "c", "x", "r", "n") if k in d}
            line += f"  worst at {where}"
        print(line)


if __name__ == "__main__":
    main()
