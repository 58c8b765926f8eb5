"""Reproduce the monotonicity verdict table, including wrong-side probes."""

import argparse
import time
from dataclasses import asdict, dataclass

from hypmono.analysis import scan_monotonicity
from hypmono.families import FamilyId

CASES = [
    ("f1", 0.0, 0.8, None, "increasing"),
    ("f1", 1.0, 0.8, None, "decreasing"),
    ("f2", -2.0, 1.0, None, "increasing"),
    ("f2", 0.0, 1.0, None, "decreasing"),
    ("f3", -1.0, 1.0, None, "increasing"),
    ("f4", 1.0, 1.0, None, "increasing"),
    ("f5", -1 / 3, 1.0, 0, "increasing"),
    ("f5", 1.0, 1.0, 0, "decreasing"),
    ("f6", 1.0, 1.0, 0, "increasing"),
    ("f7", 2.0, 1.0, None, "decreasing"),
] + [("f2", lam, 2.5, None, "non_monotone") for lam in (-5.0, -1.0, 0.0, 1.0, 5.0)]


@dataclass
class Config:
    a_points: int = 128
    arg_points: int = 32
    step: float = 1e-2
    method: str = "ratio"


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(cfg).items():
        ap.add_argument("--" + k.replace("_", "-"), type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))

    t0 = time.perf_counter()
    for kind, lam, c, n, want in CASES:
        probes = [(lam, want)]
        if want != "non_monotone":
            probes.append((lam + (cfg.step if want == "increasing" else -cfg.step), "non_monotone"))
        for lam_k, want_k in probes:
            rep = scan_monotonicity(FamilyId(kind, lam_k, n), c, cfg.arg_points, cfg.a_points, cfg.method)
            mark = "ok " if rep.verdict == want_k else "BAD"
            print(f"{mark} {kind} n={n} c={c:<4} lam={lam_k:+.4f}  {rep.verdict:<13} "
                  f"(expected {want_k}, worst {rep.worst_violation:.2e})")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
