"""Partition counts and number-of-parts functions over a part set A.

Every table is indexed by n from 0.  Conventions, fixed once here:
p_A(0) = q_A(0) = 1, N^p_A(0) = N^q_A(0) = 0, and every function is 0 at
negative arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import mul
from typing import Iterable

from .arith import TAU, TAU_S, divisor_fn
from .partsets import DomainError, PartSet, contains, parts_without
from .series import lambert_sum, product_family, series_mul


@dataclass(frozen=True)
class SequenceTable:
    fn: str
    set: str
    values: tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def rows(self, start: int = 0):
        return [(n, self.values[n]) for n in range(start, len(self.values))]


@dataclass
class VerificationRecord:
    """Both sides of an identity over n = 1..n_max, plus every n where they differ."""

    name: str
    set: str
    n_max: int
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _label(s) -> str:
    if isinstance(s, PartSet):
        return str(s)
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _table(fn, s, values) -> SequenceTable:
    return SequenceTable(fn, _label(s), tuple(values))


def p_table(s: PartSet | Iterable[int], N: int) -> SequenceTable:
    return _table("p", s, product_family(s, N, "inv-minus").coeffs)


def q_table(s: PartSet | Iterable[int], N: int) -> SequenceTable:
    return _table("q", s, product_family(s, N, "plus").coeffs)


def parity_diff_table(s: PartSet | Iterable[int], N: int, flavor: str = "partition") -> SequenceTable:
    """Even-minus-odd number of parts: p^e - p^o (``partition``) or q^e - q^o (``distinct``)."""
    if flavor == "partition":
        return _table("p-parity-diff", s, product_family(s, N, "inv-plus").coeffs)
    if flavor == "distinct":
        return _table("q-parity-diff", s, product_family(s, N, "minus").coeffs)
    raise ValueError(f"flavor must be 'partition' or 'distinct', got {flavor!r}")


def parity_split(s: PartSet | Iterable[int], N: int, flavor: str = "partition"):
    """(even, odd) tables recovered as (total ± diff) / 2."""
    total = p_table(s, N) if flavor == "partition" else q_table(s, N)
    diff = parity_diff_table(s, N, flavor)
    even = [(t + d) // 2 for t, d in zip(total.values, diff.values)]
    odd = [(t - d) // 2 for t, d in zip(total.values, diff.values)]
    tag = "p" if flavor == "partition" else "q"
    return _table(tag + "-even", s, even), _table(tag + "-odd", s, odd)


def np_table_gf(s: PartSet | Iterable[int], N: int) -> SequenceTable:
    prod = product_family(s, N, "inv-minus")
    lam = lambert_sum(s, N, "count", "minus-denominator")
    return _table("np", s, series_mul(prod, lam).coeffs)


def nq_table_gf(s: PartSet | Iterable[int], N: int) -> SequenceTable:
    prod = product_family(s, N, "plus")
    lam = lambert_sum(s, N, "count", "plus-denominator")
    return _table("nq", s, series_mul(prod, lam).coeffs)


def _divisor_convolution(counts, divs, N):
    # out[n] = sum_{k=0}^{n-1} counts[k] * divs[n-k]; divs[0] is never read
    out = [0]
    rev = divs[::-1]  # rev[N - j] = divs[j]
    for n in range(1, N + 1):
        out.append(sum(map(mul, counts[:n], rev[N - n : N])))
    return out


def np_table_conv(s: PartSet, N: int) -> SequenceTable:
    """N^p_A(n) = sum_{k<n} p_A(k) tau_A(n-k), with tau_A evaluated directly."""
    p = list(p_table(s, N).values)
    tau = [0] + [divisor_fn(TAU, s, n) for n in range(1, N + 1)]
    return _table("np", s, _divisor_convolution(p, tau, N))


def nq_table_conv(s: PartSet, N: int) -> SequenceTable:
    q = list(q_table(s, N).values)
    tau_s = [0] + [divisor_fn(TAU_S, s, n) for n in range(1, N + 1)]
    return _table("nq", s, _divisor_convolution(q, tau_s, N))


def part_multiplicity(s: PartSet, b: int, N: int, flavor: str = "partition") -> SequenceTable:
    """Total occurrences of the part b across all (distinct) partitions of n.

    Built from A∖{b}: N_b^p(n) = sum_k k p_{A∖{b}}(n - kb), N_b^q(n) = q_{A∖{b}}(n - b).
    """
    if not contains(s, b):
        raise DomainError(f"{b} is not a member of {s}")
    rest = parts_without(s, b, N)
    out = [0] * (N + 1)
    if flavor == "partition":
        base = product_family(rest, N, "inv-minus").coeffs
        for n in range(b, N + 1):
            out[n] = sum(k * base[n - k * b] for k in range(1, n // b + 1))
    elif flavor == "distinct":
        base = product_family(rest, N, "plus").coeffs
        for n in range(b, N + 1):
            out[n] = base[n - b]
    else:
        raise ValueError(f"flavor must be 'partition' or 'distinct', got {flavor!r}")
    tag = "np" if flavor == "partition" else "nq"
    return SequenceTable(f"{tag}_{b}", _label(s), tuple(out))


def np_recurrence_over_A(s: PartSet, x: int, N: int) -> VerificationRecord:
    """N^p_A(n) - N^p_A(n-x) against p_A(n-x) + N^p_{A∖{x}}(n) for n = 1..N."""
    if not contains(s, x):
        raise DomainError(f"{x} is not a member of {s}")
    np_a = np_table_gf(s, N).values
    p_a = p_table(s, N).values
    np_rest = np_table_gf(parts_without(s, x, N), N).values
    rec = VerificationRecord(f"np-recurrence(s={x})", str(s), N)
    for n in range(1, N + 1):
        lhs = np_a[n] - (np_a[n - x] if n >= x else 0)
        rhs = (p_a[n - x] if n >= x else 0) + np_rest[n]
        if lhs != rhs:
            rec.mismatches.append((n, lhs, rhs))
    return rec


def nq_recurrence_over_A(s: PartSet, x: int, N: int) -> VerificationRecord:
    """sum_j (-1)^j N^q_A(n - jx) against N^q_{A∖{x}}(n) + sum_{j>=1} (-1)^(j-1) q_{A∖{x}}(n - jx)."""
    if not contains(s, x):
        raise DomainError(f"{x} is not a member of {s}")
    nq_a = nq_table_gf(s, N).values
    rest = parts_without(s, x, N)
    q_rest = q_table(rest, N).values
    nq_rest = nq_table_gf(rest, N).values
    rec = VerificationRecord(f"nq-recurrence(s={x})", str(s), N)
    for n in range(1, N + 1):
        lhs = sum((-1) ** j * nq_a[n - j * x] for j in range(n // x + 1))
        rhs = nq_rest[n] + sum((-1) ** (j - 1) * q_rest[n - j * x] for j in range(1, n // x + 1))
        if lhs != rhs:
            rec.mismatches.append((n, lhs, rhs))
    return rec
