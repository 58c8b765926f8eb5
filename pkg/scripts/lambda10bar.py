"""Numerical look at sup_a lambda_10(a, n) for a range of truncation indices."""

import argparse
from dataclasses import asdict, dataclass

from hypmono.analysis import solve_threshold
from hypmono.families import lambda_fn


@dataclass
class Config:
    n_max: int = 8
    tol: float = 1e-10
    profile_points: int = 6


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(cfg).items():
        ap.add_argument("--" + k.replace("_", "-"), type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))

    for n in range(cfg.n_max + 1):
        est = solve_threshold("lambda10bar", n=n, tol=cfg.tol)
        where = "a->0+" if est.attained_on_boundary else f"a={est.arg_at_extremum:.6f}"
        # a few interior samples to show how far below the supremum lambda_10 sits
        samples = [lambda_fn(10, 0.5 * (k + 1) / cfg.profile_points, 1.0, n)
                   for k in range(cfg.profile_points)]
        print(f"n={n:2d}  sup={est.value:.12f} ({where})  profile=" +
              " ".join(f"{s:.4f}" for s in samples))


if __name__ == "__main__":
    main()
