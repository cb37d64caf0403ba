"""Ground truth by exhaustive enumeration at small n.

Nothing here touches generating functions; it only lists the objects and counts
them.  The limits keep the full cross-check well under a minute and can be
raised with the ``PARTCOUNT_GUARDRAIL`` environment variable.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass

from .partsets import PartSet, elements_up_to

PARTITION_LIMIT = 40
CARLITZ_LIMIT = 25

FIELDS = ("p", "q", "np", "nq", "p_parity_diff", "q_parity_diff", "cl")


class GuardrailError(ValueError):
    pass


def _limit(default: int) -> int:
    raw = os.environ.get("PARTCOUNT_GUARDRAIL")
    if raw:
        try:
            return max(default, int(raw))
        except ValueError:
            raise GuardrailError(f"PARTCOUNT_GUARDRAIL must be an integer, got {raw!r}") from None
    return default


def partition_limit() -> int:
    return _limit(PARTITION_LIMIT)


def carlitz_limit() -> int:
    return _limit(CARLITZ_LIMIT)


def _guard(n: int, limit: int, what: str):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > limit:
        raise GuardrailError(f"{what} enumeration is limited to n <= {limit}, got n = {n}")


def enumerate_partitions(n: int, s: PartSet, distinct: bool = False) -> list[tuple[int, ...]]:
    """All partitions of n with parts in A, as non-increasing tuples."""
    _guard(n, partition_limit(), "partition")
    parts = elements_up_to(s, n) if n else []
    out: list[tuple[int, ...]] = []

    def rec(remaining, max_idx, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        # parts[max_idx] is the largest part still allowed
        for i in range(max_idx, -1, -1):
            a = parts[i]
            if a > remaining:
                continue
            prefix.append(a)
            rec(remaining - a, i - 1 if distinct else i, prefix)
            prefix.pop()

    rec(n, len(parts) - 1, [])
    return out


def enumerate_carlitz(n: int, s: PartSet) -> list[tuple[int, ...]]:
    """All compositions of n with parts in A and no two equal neighbours."""
    _guard(n, carlitz_limit(), "Carlitz")
    parts = elements_up_to(s, n) if n else []
    out: list[tuple[int, ...]] = []

    def rec(remaining, last, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a in parts:
            if a > remaining:
                break
            if a == last:
                continue
            prefix.append(a)
            rec(remaining - a, a, prefix)
            prefix.pop()

    rec(n, None, [])
    return out


@dataclass(frozen=True)
class OracleCounts:
    n: int
    set: str
    p: int
    q: int
    np: int
    nq: int
    p_parity_diff: int
    q_parity_diff: int
    cl: int

    def values(self) -> dict[str, int]:
        d = asdict(self)
        return {k: d[k] for k in FIELDS}


def oracle_counts(n: int, s: PartSet) -> OracleCounts:
    parts = enumerate_partitions(n, s)
    dparts = [x for x in parts if len(set(x)) == len(x)]
    carlitz = enumerate_carlitz(n, s)
    return OracleCounts(
        n=n,
        set=str(s),
        p=len(parts),
        q=len(dparts),
        np=sum(map(len, parts)),
        nq=sum(map(len, dparts)),
        p_parity_diff=sum(-1 if len(x) % 2 else 1 for x in parts),
        q_parity_diff=sum(-1 if len(x) % 2 else 1 for x in dparts),
        cl=len(carlitz),
    )


def engine_counts(s: PartSet, n_max: int) -> list[OracleCounts]:
    """The same seven quantities from the series/recurrence engine, n = 0..n_max."""
    from .carlitz import carlitz_table_gf
    from .partitions import np_table_gf, nq_table_gf, p_table, parity_diff_table, q_table

    N = n_max
    cols = {
        "p": p_table(s, N).values,
        "q": q_table(s, N).values,
        "np": np_table_gf(s, N).values,
        "nq": nq_table_gf(s, N).values,
        "p_parity_diff": parity_diff_table(s, N, "partition").values,
        "q_parity_diff": parity_diff_table(s, N, "distinct").values,
        "cl": carlitz_table_gf(s, N).values,
    }
    return [OracleCounts(n=n, set=str(s), **{k: cols[k][n] for k in FIELDS}) for n in range(N + 1)]


def oracle_diff(s: PartSet, n_max: int) -> list[dict]:
    """Per-n comparison rows; raises GuardrailError before enumerating anything too large."""
    _guard(n_max, min(partition_limit(), carlitz_limit()), "oracle")
    engine = engine_counts(s, n_max)
    rows = []
    for n in range(n_max + 1):
        o = oracle_counts(n, s).values()
        e = engine[n].values()
        rows.append({
            "n": n,
            "set": str(s),
            "match": o == e,
            "oracle": {k: str(v) for k, v in o.items()},
            "engine": {k: str(v) for k, v in e.items()},
        })
    return rows
