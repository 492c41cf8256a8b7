#!/usr/bin/env python3
"""Calibrate the two shipped bias settings of cimotifs.mbstate.

Density here means: interacting pairs between two independently drawn
bases (seeds s and s+1000) divided by n*n, at n_sp=128, rank d=2.

Two anchors, two constants:

* CALIBRATION_BIAS — median density at N=8, n=2**12 should sit near 6e-6
  (within 3x either way);
* TREND_BIAS — median density must fall strictly as N walks 4, 8, 12,
  16, 20 at n=2**12.

Run ``--check`` to validate the shipped constants, ``--sweep`` to print a
grid of candidates.  Medians are over ``--seeds`` independent draws.
"""

from __future__ import annotations

import argparse
import statistics
import sys

sys.path.insert(0, "src")

from cimotifs.mbstate import CALIBRATION_BIAS, TREND_BIAS, random_basis  # noqa: E402
from cimotifs.sparsity import InteractionRank, count_pairs  # noqa: E402

PARTICLE_LADDER = (4, 8, 12, 16, 20)
TARGET = 6e-6


def density(n: int, n_particles: int, bias: float, seed: int) -> float:
    rows = random_basis(n, n_particles, bias=bias, seed=seed)
    cols = random_basis(n, n_particles, bias=bias, seed=seed + 1000)
    pc = count_pairs(rows, cols, InteractionRank(), "combined")
    return pc.total / float(n) / float(n)


def median_density(n: int, n_particles: int, bias: float, seeds: int) -> float:
    return statistics.median(
        density(n, n_particles, bias, seed) for seed in range(seeds)
    )


def check(n: int, seeds: int) -> int:
    ok = True

    d8 = median_density(n, 8, CALIBRATION_BIAS, seeds)
    in_window = TARGET / 3 <= d8 <= TARGET * 3
    ok &= in_window
    print(f"CALIBRATION_BIAS={CALIBRATION_BIAS}: density(N=8, n={n}) = {d8:.3e} "
          f"(target {TARGET:.0e} x/÷3) {'OK' if in_window else 'FAIL'}")

    ds = [median_density(n, N, TREND_BIAS, seeds) for N in PARTICLE_LADDER]
    decreasing = all(a > b for a, b in zip(ds, ds[1:]))
    ok &= decreasing
    print(f"TREND_BIAS={TREND_BIAS}: densities over N={PARTICLE_LADDER}:")
    for N, d in zip(PARTICLE_LADDER, ds):
        print(f"  N={N:2d}  {d:.3e}")
    print(f"  strictly decreasing: {'OK' if decreasing else 'FAIL'}")
    return 0 if ok else 1


def sweep(n: int, seeds: int, biases: list[float]) -> int:
    print(f"n={n}, seeds={seeds}")
    header = "bias      " + "".join(f"N={N:<10d}" for N in PARTICLE_LADDER)
    print(header)
    for b in biases:
        ds = [median_density(n, N, b, seeds) for N in PARTICLE_LADDER]
        trend = "dec" if all(x > y for x, y in zip(ds, ds[1:])) else "   "
        cells = "".join(f"{d:<12.3e}" for d in ds)
        print(f"{b:<10.4f}{cells}{trend}")
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="validate the shipped constants")
    ap.add_argument("--sweep", action="store_true", help="print a candidate grid")
    ap.add_argument("--n", type=int, default=2**12)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--biases", type=float, nargs="*",
                    default=[0.0, 0.02, 0.0275, 0.05, 0.1, 0.15, 0.2, 0.3])
    args = ap.parse_args()
    if args.sweep:
        return sweep(args.n, args.seeds, args.biases)
    return check(args.n, args.seeds)


if __name__ == "__main__":
    sys.exit(main())
