"""Command-line entry point.

Exit codes: 0 all checks passed, 1 a mathematical failure was found,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import arith
from .arith import SIGMA, SIGMA_S, TAU, TAU_S
from .asymptotics import FiniteSetA, HypothesisError, check_all_residues, ratio_report
from .carlitz import carlitz_table_gf
from .identities import (
    DEFAULT_SETS,
    ConstraintError,
    UnknownIdentity,
    catalog,
    get_entry,
    verify,
    verify_all,
)
from .oracle import GuardrailError, oracle_diff
from .partitions import np_table_gf, nq_table_gf, p_table, parity_diff_table, q_table
from .partsets import DomainError, SetSpecError, parse_set_spec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# fn name -> (first n, builder(set, N, prime) -> values indexed from 0)
FUNCTIONS = {
    "p": (0, lambda s, N, _: p_table(s, N).values),
    "q": (0, lambda s, N, _: q_table(s, N).values),
    "np": (1, lambda s, N, _: np_table_gf(s, N).values),
    "nq": (1, lambda s, N, _: nq_table_gf(s, N).values),
    "p-parity-diff": (0, lambda s, N, _: parity_diff_table(s, N, "partition").values),
    "q-parity-diff": (0, lambda s, N, _: parity_diff_table(s, N, "distinct").values),
    "tau": (1, lambda s, N, _: _divisor_values(TAU, s, N)),
    "tau-s": (1, lambda s, N, _: _divisor_values(TAU_S, s, N)),
    "sigma": (1, lambda s, N, _: _divisor_values(SIGMA, s, N)),
    "sigma-s": (1, lambda s, N, _: _divisor_values(SIGMA_S, s, N)),
    "cl": (0, lambda s, N, _: carlitz_table_gf(s, N).values),
    "hamming": (0, lambda s, N, _: [arith.hamming_weight(n) for n in range(N + 1)]),
    "vp": (1, lambda s, N, prime: [0] + [arith.p_adic_valuation(prime, n) for n in range(1, N + 1)]),
}


def _divisor_values(kind, s, N):
    return [0] + [arith.divisor_fn(kind, s, n) for n in range(1, N + 1)]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    set_spec: str | None = None
    name: str | None = None  # fn name or identity id
    n_max: int | None = None
    l_max: int | None = None
    format: str = "json"
    out: str | None = None
    prime: int = 2
    target: str = "np"
    ratio_n: tuple[int, ...] = ()

    def validate(self):
        if self.n_max is not None and self.n_max < 1:
            raise UsageError("--n-max must be at least 1")
        if self.command == "compute" and self.name not in FUNCTIONS:
            raise UsageError(f"unknown function {self.name!r}; choose from {', '.join(FUNCTIONS)}")
        if self.command == "verify" and self.name != "all":
            try:
                get_entry(self.name)
            except UnknownIdentity:
                raise UsageError(f"unknown identity {self.name!r}") from None
        if self.format not in ("json", "csv"):
            raise UsageError("--format must be json or csv")
        if self.format == "csv" and self.command != "compute":
            raise UsageError("csv output is only available for compute")


def _parse_set(text):
    try:
        return parse_set_spec(text)
    except (SetSpecError, DomainError) as exc:
        raise UsageError(f"bad set spec: {exc}") from None


def cmd_compute(cfg: RunConfig, out) -> int:
    s = _parse_set(cfg.set_spec or "naturals")
    start, build = FUNCTIONS[cfg.name]
    if cfg.name == "vp" and not arith.is_prime(cfg.prime):
        raise UsageError(f"--prime {cfg.prime} is not prime")
    values = build(s, cfg.n_max, cfg.prime)
    rows = [(n, values[n]) for n in range(start, cfg.n_max + 1)]
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        payload = {"fn": cfg.name, "set": str(s),
                   "rows": [{"n": n, "value": str(v)} for n, v in rows]}
        out.write(json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    N = cfg.n_max
    sets = [_parse_set(cfg.set_spec)] if cfg.set_spec else None
    if cfg.name == "all":
        reports = verify_all(sets if sets is not None else DEFAULT_SETS, N)
    else:
        try:
            reports = [verify(cfg.name, sets[0] if sets else None, N)]
        except ConstraintError as exc:
            raise UsageError(str(exc)) from None
    for rep in reports:
        out.write(rep.to_json() + "\n")
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def cmd_asymptotics(cfg: RunConfig, out) -> int:
    s = _parse_set(cfg.set_spec or "")
    if not s.is_finite:
        raise UsageError(f"asymptotics need a finite set, got {s}")
    try:
        A = FiniteSetA.of(s)
    except HypothesisError:
        raise UsageError("gcd(A) must be 1") from None
    targets = ("p", "np") if cfg.target == "both" else (cfg.target,)
    ok = True
    for target in targets:
        degree = A.k if target == "np" else A.k - 1
        l_max = cfg.l_max if cfg.l_max is not None else A.k + 4
        window = l_max - 1
        if window < degree + 2:
            raise UsageError(f"--l-max {l_max} too small; need at least {degree + 3}")
        for rep in check_all_residues(A, target, 1, window):
            ok &= rep.match
            out.write(rep.to_json() + "\n")
    for row in ratio_report(A, cfg.ratio_n or (100, 1000)):
        out.write(json.dumps({"set": str(A), "n": row.n, "ratio": str(row.ratio),
                              "ratio_decimal": row.decimal}) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_diff(cfg: RunConfig, out) -> int:
    s = _parse_set(cfg.set_spec or "naturals")
    try:
        rows = oracle_diff(s, cfg.n_max)
    except GuardrailError as exc:
        raise UsageError(str(exc)) from None
    for row in rows:
        out.write(json.dumps(row) + "\n")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "asymptotics": cmd_asymptotics,
    "oracle-diff": cmd_oracle_diff,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partcount",
                                     description="Partition, number-of-parts and Carlitz counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("compute", help="emit a table of n, value rows")
    p.add_argument("--set", dest="set_spec", default="naturals")
    p.add_argument("--fn", dest="name", required=True, help=", ".join(FUNCTIONS))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--prime", type=int, default=2, help="prime for --fn vp")
    common(p)

    p = sub.add_parser("verify", help="check catalog identities")
    p.add_argument("--identity", dest="name", required=True, help="identity id or 'all'")
    p.add_argument("--set", dest="set_spec")
    p.add_argument("--n-max", type=int, default=200)
    common(p)

    p = sub.add_parser("asymptotics", help="finite-difference checks on every residue")
    p.add_argument("--set", dest="set_spec", required=True)
    p.add_argument("--l-max", type=int)
    p.add_argument("--target", choices=("p", "np", "both"), default="np")
    p.add_argument("--ratio-n", type=lambda t: tuple(int(x) for x in t.split(",")), default=())
    common(p)

    p = sub.add_parser("oracle-diff", help="compare brute-force enumeration with the engine")
    p.add_argument("--set", dest="set_spec", default="naturals")
    p.add_argument("--n-max", type=int, required=True)
    common(p)

    sub.add_parser("list", help="list identity ids")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for e in catalog():
            print(f"{e.id}\t{e.constraint}\t{e.description}")
        return EXIT_OK
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    buf = io.StringIO()
    try:
        cfg.validate()
        code = COMMANDS[cfg.command](cfg, buf)
    except UsageError as exc:
        print(f"partcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
