#!/usr/bin/env python3
"""Track N^p_A(n) / (c n^k) toward 1 and check the per-residue top differences.

Example:
    python3 scripts/asymptotic_ratios.py --set finite:1,2,3 --points 100,300,1000,3000
"""

import argparse
import time
from dataclasses import dataclass

from partcount.asymptotics import FiniteSetA, check_all_residues, leading_coefficient, ratio_report
from partcount.partitions import np_table_gf
from partcount.partsets import parse_set_spec


@dataclass(frozen=True)
class RatioConfig:
    elements: tuple
    points: tuple = (100, 300, 1000, 3000)
    strict: bool = False


def run(cfg: RatioConfig):
    A = FiniteSetA(cfg.elements)
    lc = leading_coefficient(A)
    print(f"A = {A}  k = {A.k}  P = {A.period}  c = {lc.per_n}  c_k = {lc.per_period}")

    for target in ("p", "np"):
        reports = check_all_residues(A, target, 0 if cfg.strict else 1, A.k + 3)
        tops = sorted({r.top_difference for r in reports})
        ok = all(r.match for r in reports)
        print(f"  {target:2s} residues={len(reports):3d} top differences={tops} "
              f"expected={reports[0].expected} {'ok' if ok else 'MISMATCH'}")

    t0 = time.perf_counter()
    table = np_table_gf(A.elements, max(cfg.points)).values
    dt = time.perf_counter() - t0
    print(f"  table to n={max(cfg.points)} in {dt:.2f}s")
    for row in ratio_report(A, cfg.points, table):
        print(f"  n={row.n:6d}  ratio={row.decimal}  |ratio-1|={abs(float(row.ratio) - 1):.2e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--set", action="append", dest="sets",
                    help="finite set spec, repeatable (default: the four standard sets)")
    ap.add_argument("--points", default="100,300,1000,3000")
    ap.add_argument("--strict", action="store_true", help="sample from l = 0 instead of l = 1")
    args = ap.parse_args()
    specs = args.sets or ["finite:1,2", "finite:1,2,3", "finite:2,3,5", "finite:3,4,5"]
    points = tuple(int(x) for x in args.points.split(","))
    for spec in specs:
        run(RatioConfig(parse_set_spec(spec).elements, points, args.strict))


if __name__ == "__main__":
    main()
