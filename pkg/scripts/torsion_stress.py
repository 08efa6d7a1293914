#!/usr/bin/env python3
"""Stress the torsion = defect identity on seeded random presentations.

Draws random cokernels, times bass_torsion against the full functor-side
verification, and reports agreement plus timing percentiles.
"""

import argparse
import random
import statistics
import sys
import time
from dataclasses import dataclass

from malgrange.corpus import random_cokernel
from malgrange.functors import verify_main_theorem
from malgrange.modules import bass_torsion, q_dimension
from malgrange.rings import ring


@dataclass(frozen=True)
class StressConfig:
    seed: int = 1789
    count: int = 20
    nrows: int = 2
    ncols: int = 3
    deg: int = 2
    variables: str = "x,y"


def run(cfg: StressConfig) -> int:
    r = ring(*cfg.variables.split(","))
    rng = random.Random(cfg.seed)
    torsion_times = []
    check_times = []
    failures = 0
    for i in range(cfg.count):
        m = random_cokernel(r, rng, cfg.nrows, cfg.ncols, cfg.deg)
        t0 = time.monotonic()
        t, _ = bass_torsion(m)
        t1 = time.monotonic()
        rep = verify_main_theorem(m)
        t2 = time.monotonic()
        torsion_times.append(t1 - t0)
        check_times.append(t2 - t1)
        dim = q_dimension(t)
        dim_s = "inf" if dim is None else str(dim)
        status = "ok" if rep.equal else "MISMATCH"
        print(f"case {i:3d}: torsion dim {dim_s:>4}  "
              f"torsion {t1 - t0:6.3f}s  check {t2 - t1:6.3f}s  {status}")
        if not rep.equal:
            failures += 1
    print()
    for label, times in (("bass_torsion", torsion_times),
                         ("full check", check_times)):
        print(f"{label}: median {statistics.median(times):.3f}s, "
              f"max {max(times):.3f}s, total {sum(times):.3f}s")
    print(f"agreement: {cfg.count - failures}/{cfg.count}")
    return 1 if failures else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    cfg = StressConfig()
    ap.add_argument("--seed", type=int, default=cfg.seed)
    ap.add_argument("--count", type=int, default=cfg.count)
    ap.add_argument("--nrows", type=int, default=cfg.nrows)
    ap.add_argument("--ncols", type=int, default=cfg.ncols)
    ap.add_argument("--deg", type=int, default=cfg.deg)
    ap.add_argument("--variables", default=cfg.variables,
                    help="comma-separated ring variable names")
    args = ap.parse_args()
    return run(StressConfig(seed=args.seed, count=args.count,
                            nrows=args.nrows, ncols=args.ncols,
                            deg=args.deg, variables=args.variables))


if __name__ == "__main__":
    sys.exit(main())
