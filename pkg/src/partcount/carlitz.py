"""Carlitz compositions (no two adjacent parts equal) with parts in A."""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import Sequence

from .arith import TAU_S, divisor_fn, hamming_weight, p_adic_valuation
from .partitions import VerificationRecord, nq_table_gf, q_table
from .partsets import BINARY, PartSet
from .series import Series, lambert_sum, series_invert, series_sub


@dataclass(frozen=True)
class CarlitzTable:
    set: str
    values: tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def carlitz_table_gf(s: PartSet, N: int) -> CarlitzTable:
    """cl_A as the reciprocal of 1 - sum_a x^a/(1 + x^a)."""
    denom = series_sub(Series.one(N), lambert_sum(s, N, "count", "plus-denominator"))
    return CarlitzTable(str(s), series_invert(denom).coeffs)


def carlitz_from_signed_tau(tau_s: Sequence[int], N: int) -> list[int]:
    """cl(n) = sum_{k<n} cl(k) tau_s(n-k), cl(0) = 1; tau_s[0] is ignored."""
    cl = [1]
    for n in range(1, N + 1):
        # cl[k] pairs with tau_s[n-k], k = 0..n-1
        cl.append(sum(map(mul, cl, tau_s[n:0:-1])))
    return cl


def carlitz_table_rec(s: PartSet, N: int) -> CarlitzTable:
    tau_s = [0] + [divisor_fn(TAU_S, s, n) for n in range(1, N + 1)]
    return CarlitzTable(str(s), tuple(carlitz_from_signed_tau(tau_s, N)))


def verify_carlitz_q_identity(s: PartSet, N: int) -> VerificationRecord:
    """sum_k cl(k) q(n-k) - sum_{t<n} cl(t) N^q(n-t) = q(n) for n = 1..N."""
    cl = carlitz_table_gf(s, N).values
    q = q_table(s, N).values
    nq = nq_table_gf(s, N).values
    rec = VerificationRecord("carlitz-q", str(s), N)
    for n in range(1, N + 1):
        lhs = sum(cl[k] * q[n - k] for k in range(n + 1)) - sum(cl[t] * nq[n - t] for t in range(n))
        if lhs != q[n]:
            rec.mismatches.append((n, lhs, q[n]))
    return rec


def verify_carlitz_binary(N: int) -> VerificationRecord:
    """Both Carlitz-binary identities, through popcount and 2-adic valuation only."""
    cl = carlitz_table_gf(BINARY, N).values
    rec = VerificationRecord("carlitz-binary", str(BINARY), N)
    for n in range(1, N + 1):
        lhs = sum(cl[k] * (1 - hamming_weight(n - k)) for k in range(n + 1))
        if lhs != 1:
            rec.mismatches.append((n, lhs, 1))
            continue
        rhs = sum(cl[k] * (1 - p_adic_valuation(2, n - k)) for k in range(n))
        if cl[n] != rhs:
            rec.mismatches.append((n, cl[n], rhs))
    return rec


__all__ = [
    "CarlitzTable",
    "carlitz_table_gf",
    "carlitz_table_rec",
    "carlitz_from_signed_tau",
    "verify_carlitz_q_identity",
    "verify_carlitz_binary",
]
