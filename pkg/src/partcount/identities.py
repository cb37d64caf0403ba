"""Machine-checkable catalog of the convolution and recurrence identities.

Each entry evaluates both sides for n = 1..N and returns them as parallel lists.
The two sides go through different machinery: one side typically comes from
series products (generating-function route), the other from direct divisor
sums, digit functions, or tables of a different set.  Divisor-function values
are always fetched through :class:`Ingredients`, so a test double can perturb
them and watch which identities notice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from operator import mul
from typing import Callable, Sequence

from . import arith
from .arith import SIGMA, SIGMA_S, TAU, TAU_S, DivisorFnKind
from .carlitz import carlitz_from_signed_tau, carlitz_table_gf
from .partitions import np_table_gf, nq_table_gf
from .partsets import (
    BINARY,
    NATURALS,
    ODDS,
    PRIMES,
    PartSet,
    complement_up_to,
    elements_up_to,
    parts_without,
    ppowers,
)
from .series import product_family

ROVER_SHIFTS = 4  # members of A used as the shift s in the recurrences over A


class ConstraintError(ValueError):
    pass


class UnknownIdentity(KeyError):
    pass


# --- shared tables ------------------------------------------------------------


class Ingredients:
    """Cached per-(set, N) tables.  Lists are indexed by n from 0."""

    def __init__(self):
        self._cache: dict = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def divisor(self, kind: DivisorFnKind, s: PartSet, n: int) -> int:
        return arith.divisor_fn(kind, s, n)

    def divisor_list(self, kind: DivisorFnKind, s: PartSet, N: int) -> list[int]:
        return self._get(("div", kind, s, N),
                         lambda: [0] + [self.divisor(kind, s, n) for n in range(1, N + 1)])

    def product(self, parts, N: int, mode: str) -> list[int]:
        key = ("prod", parts if isinstance(parts, PartSet) else tuple(parts), N, mode)
        return self._get(key, lambda: list(product_family(parts, N, mode).coeffs))

    def np(self, parts, N: int) -> list[int]:
        key = ("np", parts if isinstance(parts, PartSet) else tuple(parts), N)
        return self._get(key, lambda: list(np_table_gf(parts, N).values))

    def nq(self, parts, N: int) -> list[int]:
        key = ("nq", parts if isinstance(parts, PartSet) else tuple(parts), N)
        return self._get(key, lambda: list(nq_table_gf(parts, N).values))

    def p(self, s, N):
        return self.product(s, N, "inv-minus")

    def q(self, s, N):
        return self.product(s, N, "plus")

    def p_diff(self, s, N):
        return self.product(s, N, "inv-plus")

    def q_diff(self, s, N):
        return self.product(s, N, "minus")

    def omega(self, N):
        return self._get(("omega", N), lambda: [arith.pentagonal_omega(m) for m in range(N + 1)])

    def odd_distinct(self, N):
        return self._get(("odd", N), lambda: arith.distinct_odd_counts(N))

    def p_pentagonal(self, N):
        """p(n) over ℕ by Euler's pentagonal recurrence, independent of product_family."""
        def build():
            w = self.omega(N)
            support = [m for m in range(1, N + 1) if w[m]]
            p = [1]
            for n in range(1, N + 1):
                p.append(-sum(w[m] * p[n - m] for m in support if m <= n))
            return p
        return self._get(("p-pent", N), build)


def conv_at(f: Sequence[int], g: Sequence[int], n: int, lo: int, hi: int) -> int:
    """sum_{k=lo}^{hi} f[k] g[n-k]."""
    if hi < lo:
        return 0
    return sum(map(mul, f[lo : hi + 1], g[n - hi : n - lo + 1][::-1]))


# --- catalog -------------------------------------------------------------------

Evaluator = Callable[[Ingredients, PartSet, int], tuple[list[int], list[int]]]


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    description: str
    constraint: str  # any | naturals | primes | ppowers | ppowers2 | finite
    evaluate: Evaluator = field(repr=False, compare=False)
    default_sets: tuple[PartSet, ...] = ()


def satisfies(constraint: str, s: PartSet) -> bool:
    if constraint == "any":
        return True
    if constraint == "naturals":
        return s.kind == "naturals"
    if constraint == "primes":
        return s.kind == "primes"
    if constraint == "ppowers":
        return s.kind == "ppowers"
    if constraint == "ppowers2":
        return s.kind == "ppowers" and s.p == 2
    if constraint == "finite":
        return s.kind in ("finite", "complement")
    raise ValueError(f"unknown constraint {constraint!r}")


CONSTRAINT_TEXT = {
    "any": "any part set",
    "naturals": "A = naturals",
    "primes": "A = primes",
    "ppowers": "A = ppowers:<p>",
    "ppowers2": "A = ppowers:2",
    "finite": "A finite (or a finite complement), so that ℕ∖A is enumerable",
}


def _ns(N):
    return range(1, N + 1)


def _np_via_tau(ing, s, N):
    np_ = ing.np(s, N)
    p = ing.p(s, N)
    tau = ing.divisor_list(TAU, s, N)
    return np_[1:], [conv_at(p, tau, n, 0, n - 1) for n in _ns(N)]


def _nq_via_tau_s(ing, s, N):
    nq = ing.nq(s, N)
    q = ing.q(s, N)
    tau_s = ing.divisor_list(TAU_S, s, N)
    return nq[1:], [conv_at(q, tau_s, n, 0, n - 1) for n in _ns(N)]


def _np_via_multiplicities(ing, s, N):
    total = [0] * (N + 1)
    for b in elements_up_to(s, N):
        base = ing.p(parts_without(s, b, N), N)
        for n in range(b, N + 1):
            total[n] += sum(k * base[n - k * b] for k in range(1, n // b + 1))
    return ing.np(s, N)[1:], total[1:]


def _nq_via_multiplicities(ing, s, N):
    total = [0] * (N + 1)
    for b in elements_up_to(s, N):
        base = ing.q(parts_without(s, b, N), N)
        for n in range(b, N + 1):
            total[n] += base[n - b]
    return ing.nq(s, N)[1:], total[1:]


def _cor_np_naturals(ing, s, N):
    np_ = ing.np(NATURALS, N)
    p = ing.p_pentagonal(N)
    tau = ing.divisor_list(TAU, NATURALS, N)
    return np_[1:], [conv_at(p, tau, n, 0, n - 1) for n in _ns(N)]


def _cor_nq_naturals(ing, s, N):
    nq = ing.nq(NATURALS, N)
    q = ing.product(ODDS, N, "inv-minus")  # distinct partitions = odd-part partitions
    tau_s = ing.divisor_list(TAU_S, NATURALS, N)
    return nq[1:], [conv_at(q, tau_s, n, 0, n - 1) for n in _ns(N)]


def _cor_omega(ing, s, N):
    np_ = ing.np(PRIMES, N)
    p = ing.p(PRIMES, N)
    big_omega = [0] + [arith.distinct_prime_count(m) for m in _ns(N)]
    return np_[1:], [conv_at(p, big_omega, n, 0, n - 1) for n in _ns(N)]


def _cor_vp(ing, s, N):
    np_ = ing.np(s, N)
    p = ing.p(s, N)
    w = [0] + [arith.p_adic_valuation(s.p, m) + 1 for m in _ns(N)]
    return np_[1:], [conv_at(p, w, n, 0, n - 1) for n in _ns(N)]


def _cor_hamming(ing, s, N):
    lhs = [arith.hamming_weight(n) for n in _ns(N)]
    rhs, prev = [], 0  # h(0) = 0
    for n in _ns(N):
        rhs.append(prev + 1 - arith.p_adic_valuation(2, n))
        prev = lhs[n - 1]
    return lhs, rhs


def _cor_hamming_note(ing, s, N):
    # h(n) = v_2(2^n / n!) = n - v_2(n!)
    return ([arith.hamming_weight(n) for n in _ns(N)],
            [n - arith.factorial_valuation(2, n) for n in _ns(N)])


def _cor_hamming_basis(ing, s, N):
    # q_A(n) = 1 and N^q_A(n) = h(n) for A = powers of 2; packed as one pair per n
    q = ing.q(BINARY, N)
    nq = ing.nq(BINARY, N)
    return ([(q[n], nq[n]) for n in _ns(N)],
            [(1, arith.hamming_weight(n)) for n in _ns(N)])


def _inv_np(ing, s, N):
    np_ = ing.np(s, N)
    qd = ing.q_diff(s, N)
    return [conv_at(np_, qd, n, 1, n) for n in _ns(N)], ing.divisor_list(TAU, s, N)[1:]


def _inv_nq(ing, s, N):
    nq = ing.nq(s, N)
    pd = ing.p_diff(s, N)
    return [conv_at(nq, pd, n, 1, n) for n in _ns(N)], ing.divisor_list(TAU_S, s, N)[1:]


def _nop_a(ing, s, N):
    np_ = ing.np(NATURALS, N)
    w = ing.omega(N)
    return [conv_at(np_, w, n, 1, n) for n in _ns(N)], ing.divisor_list(TAU, NATURALS, N)[1:]


def _signed_odd(ing, N):
    o = ing.odd_distinct(N)
    return [(-1) ** m * o[m] for m in range(N + 1)]


def _nop_b(ing, s, N):
    nq = ing.nq(NATURALS, N)
    so = _signed_odd(ing, N)
    return [conv_at(nq, so, n, 1, n) for n in _ns(N)], ing.divisor_list(TAU_S, NATURALS, N)[1:]


def _omega_inv(ing, s, N):
    np_ = ing.np(PRIMES, N)
    qd = ing.q_diff(PRIMES, N)
    return ([conv_at(np_, qd, n, 1, n) for n in _ns(N)],
            [arith.distinct_prime_count(n) for n in _ns(N)])


def _vp_inv(ing, s, N):
    np_ = ing.np(s, N)
    qd = ing.q_diff(s, N)
    return ([conv_at(np_, qd, n, 1, n) for n in _ns(N)],
            [arith.p_adic_valuation(s.p, n) + 1 for n in _ns(N)])


def _binary_s(ing, s, N):
    np_ = ing.np(BINARY, N)
    sgn = [1] + [(-1) ** arith.hamming_weight(m) for m in _ns(N)]
    return ([conv_at(np_, sgn, n, 1, n) for n in _ns(N)],
            [arith.p_adic_valuation(2, n) + 1 for n in _ns(N)])


def _complement_np(ing, s, N):
    np_ = ing.np(s, N)
    w = ing.omega(N)
    tau = ing.divisor_list(TAU, s, N)
    qd_c = ing.q_diff(complement_up_to(s, N), N)
    return ([conv_at(np_, w, n, 1, n) for n in _ns(N)],
            [conv_at(tau, qd_c, n, 1, n) for n in _ns(N)])


def _complement_nq(ing, s, N):
    nq = ing.nq(s, N)
    so = _signed_odd(ing, N)
    tau_s = ing.divisor_list(TAU_S, s, N)
    pd_c = ing.p_diff(complement_up_to(s, N), N)
    return ([conv_at(nq, so, n, 1, n) for n in _ns(N)],
            [conv_at(tau_s, pd_c, n, 1, n) for n in _ns(N)])


def _sigma_log(ing, s, N):
    # n p(n) = sum_{k=1}^{n} sigma(k) p(n-k); the k = 0 term would need sigma(0)
    p = ing.p(NATURALS, N)
    sigma = ing.divisor_list(SIGMA, NATURALS, N)
    return [n * p[n] for n in _ns(N)], [conv_at(sigma, p, n, 1, n) for n in _ns(N)]


def _log_diff(ing, s, N, signed):
    if signed:
        nx, base = ing.nq(s, N), ing.q(s, N)
        sig, tau = ing.divisor_list(SIGMA_S, s, N), ing.divisor_list(TAU_S, s, N)
    else:
        nx, base = ing.np(s, N), ing.p(s, N)
        sig, tau = ing.divisor_list(SIGMA, s, N), ing.divisor_list(TAU, s, N)
    t_tau = [t * tau[t] for t in range(N + 1)]
    lhs = [n * nx[n] for n in _ns(N)]
    rhs = [conv_at(nx, sig, n, 1, n - 1) + conv_at(t_tau, base, n, 1, n) for n in _ns(N)]
    return lhs, rhs


def _log_diff_binary(ing, s, N):
    nb = ing.np(BINARY, N)
    b = ing.p(BINARY, N)
    sig = [0] + [2 ** (arith.p_adic_valuation(2, m) + 1) - 1 for m in _ns(N)]
    t_w = [0] + [t * (arith.p_adic_valuation(2, t) + 1) for t in _ns(N)]
    lhs = [n * nb[n] for n in _ns(N)]
    rhs = [conv_at(nb, sig, n, 1, n - 1) + conv_at(t_w, b, n, 1, n) for n in _ns(N)]
    return lhs, rhs


def _shifts(s, N):
    return elements_up_to(s, N)[:ROVER_SHIFTS]


def _rover_p(ing, s, N):
    lhs, rhs = [], []
    np_ = ing.np(s, N)
    p = ing.p(s, N)
    for x in _shifts(s, N):
        np_rest = ing.np(parts_without(s, x, N), N)
        for n in _ns(N):
            lhs.append(np_[n] - (np_[n - x] if n >= x else 0))
            rhs.append((p[n - x] if n >= x else 0) + np_rest[n])
    return lhs, rhs


def _rover_q(ing, s, N):
    lhs, rhs = [], []
    for x in _shifts(s, N):
        nq = ing.nq(s, N)
        rest = parts_without(s, x, N)
        q_rest = ing.q(rest, N)
        nq_rest = ing.nq(rest, N)
        for n in _ns(N):
            lhs.append(sum((-1) ** j * nq[n - j * x] for j in range(n // x + 1)))
            rhs.append(nq_rest[n] + sum((-1) ** (j - 1) * q_rest[n - j * x]
                                        for j in range(1, n // x + 1)))
    return lhs, rhs


def _carlitz_rec(ing, s, N):
    cl = list(carlitz_table_gf(s, N).values)
    rec = carlitz_from_signed_tau(ing.divisor_list(TAU_S, s, N), N)
    return cl[1:], rec[1:]


def _carlitz_q(ing, s, N):
    cl = list(carlitz_table_gf(s, N).values)
    q = ing.q(s, N)
    nq = ing.nq(s, N)
    lhs = [conv_at(cl, q, n, 0, n) - conv_at(cl, nq, n, 0, n - 1) for n in _ns(N)]
    return lhs, q[1:]


def _carlitz_binary_a(ing, s, N):
    cl = list(carlitz_table_gf(BINARY, N).values)
    w = [0] + [1 - arith.p_adic_valuation(2, m) for m in _ns(N)]
    return cl[1:], [conv_at(cl, w, n, 0, n - 1) for n in _ns(N)]


def _carlitz_binary_b(ing, s, N):
    cl = list(carlitz_table_gf(BINARY, N).values)
    w = [1 - arith.hamming_weight(m) for m in range(N + 1)]
    return [conv_at(cl, w, n, 0, n) for n in _ns(N)], [1] * N


_FIN = (PartSet.finite([2]), PartSet.finite([1, 2]), PartSet.finite([2, 3]))


def _entries() -> list[IdentityEntry]:
    E = IdentityEntry
    nat, pr, b2 = (NATURALS,), (PRIMES,), (BINARY,)
    return [
        E("T2.1a", "N^p_A(n) from prod 1/(1-x^a) * sum x^b/(1-x^b) equals sum_b N_b^p(n), "
          "N_b^p(n) = sum_k k p_{A∖{b}}(n-kb)", "any", _np_via_multiplicities),
        E("T2.1b", "N^p_A(n) = sum_{k=0}^{n-1} p_A(k) tau_A(n-k)", "any", _np_via_tau),
        E("T2.1c", "N^q_A(n) from prod (1+x^a) * sum x^b/(1+x^b) equals sum_b q_{A∖{b}}(n-b)",
          "any", _nq_via_multiplicities),
        E("T2.1d", "N^q_A(n) = sum_{k=0}^{n-1} q_A(k) tau^s_A(n-k)", "any", _nq_via_tau_s),
        E("C2.1a", "N^p(n) = sum_{k<n} p(k) tau(n-k) over ℕ, p(k) from the pentagonal recurrence",
          "naturals", _cor_np_naturals, nat),
        E("C2.1b", "N^q(n) = sum_{k<n} q(k) tau^s(n-k) over ℕ, q(k) counted as odd-part partitions",
          "naturals", _cor_nq_naturals, nat),
        E("C-Omega", "A = primes: N^p_A(n) = sum_{k<n} p_A(k) Omega(n-k), Omega = number of "
          "distinct prime divisors (what tau_A is for A = primes)", "primes", _cor_omega, pr),
        E("C-vp", "A = {1,p,p^2,...}: N^p_A(n) = sum_{k<n} p_A(k) (v_p(n-k) + 1)",
          "ppowers", _cor_vp, (BINARY, ppowers(3))),
        E("C-hamming", "h(n) = h(n-1) + 1 - v_2(n), h(0) = 0", "ppowers2", _cor_hamming, b2),
        E("C-hamming-note", "h(n) = v_2(2^n / n!), checked as h(n) = n - v_2(n!) with Legendre's formula",
          "ppowers2", _cor_hamming_note, b2),
        E("C-hamming-basis", "A = powers of 2: q_A(n) = 1 and N^q_A(n) = h(n)",
          "ppowers2", _cor_hamming_basis, b2),
        E("T2.2a", "sum_{k=1}^{n} N^p_A(k) (q^e_A - q^o_A)(n-k) = tau_A(n)", "any", _inv_np),
        E("T2.2b", "sum_{k=1}^{n} N^q_A(k) (p^e_A - p^o_A)(n-k) = tau^s_A(n)", "any", _inv_nq),
        E("C-NOP", "sum_{k=1}^{n} N^p(k) omega(n-k) = tau(n), omega the pentagonal weight",
          "naturals", _nop_a, nat),
        E("C-NOP-b", "sum_{k=1}^{n} (-1)^(n-k) N^q(k) o(n-k) = tau^s(n), o = distinct odd-part count",
          "naturals", _nop_b, nat),
        E("C-Omega-inv", "A = primes: sum_{k=1}^{n} N^p_A(k) (q^e_A - q^o_A)(n-k) = Omega(n)",
          "primes", _omega_inv, pr),
        E("C-vp-inv", "A = {1,p,p^2,...}: sum_{k=1}^{n} N^p_A(k) (q^e_A - q^o_A)(n-k) = v_p(n) + 1",
          "ppowers", _vp_inv, (BINARY, ppowers(3))),
        E("C-binary-s", "sum_{k=1}^{n} N^p_bin(k) s(n-k) = v_2(n) + 1, s(0) = 1, s(m) = (-1)^h(m)",
          "ppowers2", _binary_s, b2),
        E("T2.3a", "sum_{k=1}^{n} N^p_A(k) omega(n-k) = sum_{k=1}^{n} tau_A(k) (q^e - q^o)_{ℕ∖A}(n-k)",
          "finite", _complement_np, _FIN),
        E("T2.3b", "sum_{k=1}^{n} (-1)^(n-k) N^q_A(k) o(n-k) = "
          "sum_{k=1}^{n} tau^s_A(k) (p^e - p^o)_{ℕ∖A}(n-k)", "finite", _complement_nq, _FIN),
        E("E-sigma", "n p(n) = sum_{k=1}^{n} sigma(k) p(n-k), summed from k = 1 "
          "since sigma(0) is undefined", "naturals", _sigma_log, nat),
        E("T2.4a", "n N^p_A(n) = sum_{k=1}^{n-1} N^p_A(k) sigma_A(n-k) + sum_{t=1}^{n} t tau_A(t) p_A(n-t)",
          "any", lambda i, s, N: _log_diff(i, s, N, False)),
        E("T2.4b", "n N^q_A(n) = sum_{k=1}^{n-1} N^q_A(k) sigma^s_A(n-k) + sum_{t=1}^{n} t tau^s_A(t) q_A(n-t)",
          "any", lambda i, s, N: _log_diff(i, s, N, True)),
        E("C2.4a", "n N^p(n) = sum N^p(k) sigma(n-k) + sum t tau(t) p(n-t) over ℕ",
          "naturals", lambda i, s, N: _log_diff(i, NATURALS, N, False), nat),
        E("C2.4b", "n N^q(n) = sum N^q(k) sigma^s(n-k) + sum t tau^s(t) q(n-t) over ℕ",
          "naturals", lambda i, s, N: _log_diff(i, NATURALS, N, True), nat),
        E("C2.4c", "n N^p_bin(n) = sum N^p_bin(k) (2^(v_2(n-k)+1) - 1) + sum t (v_2(t)+1) b(n-t)",
          "ppowers2", _log_diff_binary, b2),
        E("T2.5a", f"N^p_A(n) - N^p_A(n-s) = p_A(n-s) + N^p_{{A∖{{s}}}}(n), for the first "
          f"{ROVER_SHIFTS} members s of A", "any", _rover_p),
        E("T2.5b", "sum_j (-1)^j N^q_A(n-js) = N^q_{A∖{s}}(n) + sum_{j>=1} (-1)^(j-1) q_{A∖{s}}(n-js), "
          f"alternating signs throughout, first {ROVER_SHIFTS} members s of A", "any", _rover_q),
        E("T2.6a", "cl_A(n) = sum_{k<n} cl_A(k) tau^s_A(n-k), cl_A from series inversion",
          "any", _carlitz_rec),
        E("T2.6b", "sum_{k=0}^{n} cl_A(k) q_A(n-k) - sum_{t<n} cl_A(t) N^q_A(n-t) = q_A(n)",
          "any", _carlitz_q),
        E("C-carlitz-binary-a", "cl_b(n) = sum_{k<n} cl_b(k) (1 - v_2(n-k))",
          "ppowers2", _carlitz_binary_a, b2),
        E("C-carlitz-binary-b", "sum_{k=0}^{n} cl_b(k) (1 - h(n-k)) = 1, h(0) = 0",
          "ppowers2", _carlitz_binary_b, b2),
    ]


_CATALOG = _entries()
_BY_ID = {e.id: e for e in _CATALOG}

DEFAULT_SETS: tuple[PartSet, ...] = (
    NATURALS,
    PartSet.finite([1, 2]),
    PartSet.finite([2, 3]),
    PartSet.finite([1, 2, 3]),
    PartSet.finite([3, 4, 5]),
    PRIMES,
    BINARY,
    ppowers(3),
    ODDS,
)


def catalog() -> list[IdentityEntry]:
    return list(_CATALOG)


def get_entry(identity_id: str) -> IdentityEntry:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


# --- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    id: str
    set: str
    n_max: int
    status: str  # all-hold | failure | skipped
    first_failure: tuple | None = None  # (n, lhs, rhs)
    reason: str | None = None

    @property
    def failed(self) -> bool:
        return self.status == "failure"

    def to_dict(self) -> dict:
        d = {"id": self.id, "set": self.set, "n_max": self.n_max, "status": self.status,
             "first_failure": None}
        if self.first_failure is not None:
            n, lhs, rhs = self.first_failure
            d["first_failure"] = {"n": n, "lhs": str(lhs), "rhs": str(rhs)}
        if self.reason is not None:
            d["reason"] = self.reason
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _first_failure(lhs, rhs):
    # lists may concatenate several sweeps over n = 1..N
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return i, a, b
    if len(lhs) != len(rhs):
        raise RuntimeError("identity sides have different lengths")
    return None


def verify(identity_id: str, s: PartSet | None, N: int,
           ingredients: Ingredients | None = None) -> IdentityReport:
    entry = get_entry(identity_id)
    if N < 1:
        raise ValueError("n_max must be at least 1")
    if s is None:
        if not entry.default_sets:
            raise ConstraintError(f"{identity_id} needs a part set")
        s = entry.default_sets[0]
    if not satisfies(entry.constraint, s):
        raise ConstraintError(f"{identity_id} requires {CONSTRAINT_TEXT[entry.constraint]}; got {s}")
    ing = ingredients or Ingredients()
    lhs, rhs = entry.evaluate(ing, s, N)
    hit = _first_failure(lhs, rhs)
    if hit is None:
        return IdentityReport(entry.id, str(s), N, "all-hold")
    i, a, b = hit
    return IdentityReport(entry.id, str(s), N, "failure", (i % N + 1, a, b))


def verify_all(sets: Sequence[PartSet], N: int,
               ingredients: Ingredients | None = None,
               entries: Sequence[IdentityEntry] | None = None) -> list[IdentityReport]:
    """Every applicable (entry, set) pair, catalog order then set order.

    Fixed-set entries always run on their built-in sets; sets that violate an
    entry's constraint produce a ``skipped`` report.
    """
    ing = ingredients or Ingredients()
    reports = []
    for entry in entries or _CATALOG:
        targets = list(entry.default_sets)
        skipped = []
        for s in sets:
            if s in targets:
                continue
            (targets if satisfies(entry.constraint, s) else skipped).append(s)
        for s in targets:
            reports.append(verify(entry.id, s, N, ing))
        for s in skipped:
            reports.append(IdentityReport(entry.id, str(s), N, "skipped",
                                          reason=f"requires {CONSTRAINT_TEXT[entry.constraint]}"))
    return reports
