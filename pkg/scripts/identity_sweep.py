#!/usr/bin/env python3
"""Run the identity catalog over several part sets and print a status grid."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from partcount.identities import DEFAULT_SETS, Ingredients, verify_all
from partcount.partsets import parse_set_spec


@dataclass
class SweepConfig:
    sets: list = field(default_factory=lambda: list(DEFAULT_SETS))
    n_infinite: int = 200
    n_finite: int = 300


def sweep(cfg: SweepConfig):
    ing = Ingredients()
    infinite = [s for s in cfg.sets if not s.is_finite]
    finite = [s for s in cfg.sets if s.is_finite]
    return verify_all(infinite, cfg.n_infinite, ing) + verify_all(finite, cfg.n_finite, ing)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--set", action="append", dest="sets", help="repeatable; default: catalog sets")
    ap.add_argument("--n-infinite", type=int, default=200)
    ap.add_argument("--n-finite", type=int, default=300)
    args = ap.parse_args()
    cfg = SweepConfig(n_infinite=args.n_infinite, n_finite=args.n_finite)
    if args.sets:
        cfg.sets = [parse_set_spec(t) for t in args.sets]

    t0 = time.perf_counter()
    reports = sweep(cfg)
    dt = time.perf_counter() - t0
    for r in reports:
        if r.status == "skipped":
            continue
        tail = "" if r.first_failure is None else f"  first failure at n={r.first_failure[0]}"
        print(f"{r.id:20s} {r.set:22s} n<={r.n_max:<4d} {r.status}{tail}")
    counts = Counter(r.status for r in reports)
    print(f"\n{dict(counts)} in {dt:.2f}s")


if __name__ == "__main__":
    main()
