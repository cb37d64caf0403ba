"""Quasi-polynomial behaviour of p_A and N^p_A for a finite coprime part set.

For A = {a_1..a_k} with gcd 1 and period P = a_1 ... a_k, both p_A(Pl + r) and
N^p_A(Pl + r) are polynomials in l.  A polynomial of degree d has constant d-th
finite difference equal to d! times its leading coefficient, so the degree and
leading-coefficient claims become exact integer checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial, gcd, prod
from typing import Sequence

from .partitions import np_table_gf, p_table
from .partsets import PartSet

TARGETS = ("p", "np")


class HypothesisError(ValueError):
    """A does not satisfy gcd(A) = 1."""


@dataclass(frozen=True)
class FiniteSetA:
    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if not els or any(a < 1 for a in els) or len(set(els)) != len(els):
            raise ValueError(f"need distinct positive integers, got {els}")
        if reduce(gcd, els) != 1:
            raise HypothesisError(f"gcd(A) must be 1, got gcd{els} = {reduce(gcd, els)}")

    @classmethod
    def of(cls, elements) -> FiniteSetA:
        if isinstance(elements, PartSet):
            if not elements.is_finite:
                raise ValueError(f"asymptotics need a finite set, got {elements}")
            elements = elements.elements
        return cls(tuple(sorted(elements)))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def period(self) -> int:
        return prod(self.elements)

    def __str__(self):
        return "finite:" + ",".join(map(str, self.elements))


@dataclass(frozen=True)
class LeadingCoefficient:
    per_period: Fraction  # c_k: leading coefficient of N^p_A(Pl + r) in l
    per_n: Fraction  # c: N^p_A(n) ~ c n^k


def leading_coefficient(A: FiniteSetA) -> LeadingCoefficient:
    k, P = A.k, A.period
    per_n = Fraction(1, factorial(k)) * sum(Fraction(1, a) for a in A.elements) / P
    if k == 1:
        # only A = {1} is coprime; N(n) = n
        per_period = Fraction(1)
    else:
        els = A.elements
        top = sum(a ** (k - 2) * prod(b ** (k - 1) for j, b in enumerate(els) if j != i)
                  for i, a in enumerate(els))
        per_period = Fraction(top, factorial(k))
    if per_period != per_n * P ** k:
        raise AssertionError(f"leading coefficient forms disagree for {A}")
    return LeadingCoefficient(per_period, per_n)


def netto_coefficient(A: FiniteSetA) -> Fraction:
    """p_A(n) ~ n^(k-1) / (P (k-1)!)."""
    return Fraction(1, A.period * factorial(A.k - 1))


def finite_differences(values: Sequence[int], depth: int) -> list[list[int]]:
    """[values, Δvalues, Δ²values, ...] down to the depth-th difference."""
    rows = [list(values)]
    for _ in range(depth):
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


@dataclass(frozen=True)
class QuasiPolyReport:
    set: str
    target: str
    r: int
    l0: int
    window: int
    degree: int
    samples: tuple[int, ...]
    top_differences: tuple[int, ...]
    expected: Fraction
    match: bool

    @property
    def top_difference(self) -> int | None:
        return self.top_differences[0] if self.top_differences else None

    def to_dict(self) -> dict:
        return {
            "set": self.set,
            "target": self.target,
            "r": self.r,
            "l0": self.l0,
            "window": self.window,
            "degree": self.degree,
            "top_difference": None if self.top_difference is None else str(self.top_difference),
            "expected": str(self.expected),
            "match": self.match,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def degree_and_top(A: FiniteSetA, target: str) -> tuple[int, Fraction]:
    k, P = A.k, A.period
    if target == "p":
        return k - 1, Fraction(P) ** (k - 2)
    if target == "np":
        return k, factorial(k) * leading_coefficient(A).per_period
    raise ValueError(f"target must be one of {TARGETS}, got {target!r}")


def required_trunc(A: FiniteSetA, r: int, l0: int, window: int) -> int:
    return A.period * (l0 + window) + r


def target_values(A: FiniteSetA, target: str, N: int) -> tuple[int, ...]:
    if target == "p":
        return p_table(A.elements, N).values
    if target == "np":
        return np_table_gf(A.elements, N).values
    raise ValueError(f"target must be one of {TARGETS}, got {target!r}")


def quasi_poly_check(A: FiniteSetA, target: str, r: int, l0: int = 1, window: int | None = None,
                     values: Sequence[int] | None = None) -> QuasiPolyReport:
    """Sample f(Pl + r) for l = l0..l0+window and test the constant top difference.

    ``values`` may carry a precomputed table of f indexed by n; it must reach
    P (l0 + window) + r.
    """
    degree, expected = degree_and_top(A, target)
    if window is None:
        window = degree + 3
    if window < degree + 2:
        raise ValueError(f"window {window} too short for degree {degree}; need >= {degree + 2}")
    P = A.period
    if not 0 <= r < P:
        raise ValueError(f"residue r must lie in [0, {P - 1}], got {r}")
    if l0 < 0:
        raise ValueError("l0 must be non-negative")
    need = required_trunc(A, r, l0, window)
    if values is None:
        values = target_values(A, target, need)
    elif len(values) <= need:
        raise ValueError(f"table reaches n = {len(values) - 1}, need n = {need}")
    samples = [values[P * l + r] for l in range(l0, l0 + window + 1)]
    top = finite_differences(samples, degree)[-1]
    match = len(set(top)) == 1 and top[0] == expected
    return QuasiPolyReport(str(A), target, r, l0, window, degree, tuple(samples), tuple(top),
                           expected, match)


def check_all_residues(A: FiniteSetA, target: str, l0: int = 1,
                       window: int | None = None) -> list[QuasiPolyReport]:
    degree, _ = degree_and_top(A, target)
    if window is None:
        window = degree + 3
    values = target_values(A, target, required_trunc(A, A.period - 1, l0, window))
    return [quasi_poly_check(A, target, r, l0, window, values) for r in range(A.period)]


def strict_mode(A: FiniteSetA, target: str, window: int | None = None) -> list[QuasiPolyReport]:
    """Same sweep from l0 = 0; callers report mismatches rather than fail on them."""
    return check_all_residues(A, target, 0, window)


@dataclass(frozen=True)
class RatioRow:
    n: int
    ratio: Fraction

    @property
    def decimal(self) -> str:
        return f"{float(self.ratio):.6f}"


def ratio_report(A: FiniteSetA, n_points: Sequence[int], values: Sequence[int] | None = None
                 ) -> list[RatioRow]:
    """Exact N^p_A(n) / (c n^k), c the n-normalized leading constant."""
    if any(n < 1 for n in n_points):
        raise ValueError("ratio points must be positive")
    if values is None:
        values = np_table_gf(A.elements, max(n_points)).values
    c = leading_coefficient(A).per_n
    return [RatioRow(n, Fraction(values[n]) / (c * n ** A.k)) for n in n_points]


@dataclass(frozen=True)
class RatioTolerance:
    """Default tolerances for the empirical convergence of the ratio to 1."""

    k2_n: int = 1000
    k2_tol: float = 0.01
    k3_n: int = 3000
    k3_tol: float = 0.05
    k3_compare_n: int = 300
