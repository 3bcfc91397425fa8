#!/usr/bin/env python3
"""Validate a generated zero-ordinate table against mpmath.

Three checks:
  1. sampled ordinates are genuine sign changes of Z(t) within +-tol
     (certifies the positions independently of how they were found),
  2. small indices match mpmath.zetazero exactly (certifies indexing from
     the bottom),
  3. the last ordinate matches mpmath.zetazero(count) (a single missed or
     spurious zero anywhere would shift it by a whole zero gap).

Usage: validate_zeros.py [table] [--full-tail-check]
"""
import random
import sys

import mpmath as mp

TOL = 5e-8


def load(path):
    vals = []
    for line in open(path):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        vals.append(float(line))
    return vals


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else "data/zeros_100k.txt"
    tail_check = "--full-tail-check" in sys.argv
    vals = load(path)
    n = len(vals)
    print(f"{path}: {n} ordinates, height {vals[-1]:.6f}")

    mp.mp.dps = 25
    for i in range(1, 11):
        z = float(mp.zetazero(i).imag)
        assert abs(z - vals[i - 1]) < TOL, (i, z, vals[i - 1])
    print("indices 1..10 match zetazero")

    random.seed(11)
    sample = sorted(random.sample(range(10, n), 25))
    for i in sample:
        t = vals[i]
        lo, hi = mp.siegelz(t - TOL), mp.siegelz(t + TOL)
        assert lo * hi < 0, (i + 1, t, lo, hi)
    print("25 sampled ordinates bracket sign changes of Z within +-%g" % TOL)

    if tail_check:
        z = float(mp.zetazero(n).imag)
        assert abs(z - vals[-1]) < TOL, (n, z, vals[-1])
        print(f"zetazero({n}) = {z:.9f} matches the last ordinate")
    print("OK")


if __name__ == "__main__":
    main()
