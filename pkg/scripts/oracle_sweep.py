#!/usr/bin/env python3
"""Brute-force enumeration against the series engine for every catalog set."""

import argparse
import time

from partcount.identities import DEFAULT_SETS
from partcount.oracle import oracle_diff
from partcount.partsets import NATURALS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-naturals", type=int, default=18)
    ap.add_argument("--n-sparse", type=int, default=25)
    args = ap.parse_args()
    total_bad = 0
    for s in DEFAULT_SETS:
        n_max = args.n_naturals if s == NATURALS else args.n_sparse
        t0 = time.perf_counter()
        rows = oracle_diff(s, n_max)
        bad = [r["n"] for r in rows if not r["match"]]
        total_bad += len(bad)
        print(f"{str(s):16s} n<={n_max:<3d} mismatches={bad or 'none'} ({time.perf_counter() - t0:.2f}s)")
    raise SystemExit(1 if total_bad else 0)


if __name__ == "__main__":
    main()
