"""Per-c lambda_3 supremum over a c grid, plus the largest value seen (C_max)."""

import argparse
import json
from dataclasses import asdict, dataclass

from hypmono.analysis import lambda3star_sweep


@dataclass
class Config:
    c_max: float = 10.0
    points: int = 40
    tol: float = 1e-10


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(cfg).items():
        ap.add_argument("--" + k.replace("_", "-"), type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))

    cs = [1.0 + (cfg.c_max - 1.0) * (k + 1) / cfg.points for k in range(cfg.points)]
    rows, (c_best, best) = lambda3star_sweep(cs, cfg.tol)
    print(f"{'c':>8} {'lambda3*':>18} {'a at max':>12} boundary")
    for c, est in rows:
        print(f"{c:8.3f} {est.value:18.12f} {est.arg_at_extremum:12.6f} {est.attained_on_boundary}")
    # the maximum grows with c, so this is only the largest value on the sampled range
    print(json.dumps({"C_max": cfg.c_max, "observed_max": best.value, "at_c": c_best}))


if __name__ == "__main__":
    main()
