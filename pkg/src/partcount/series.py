"""Degree-truncated formal power series with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import Iterable, Sequence

from .partsets import PartSet, elements_up_to

PRODUCT_MODES = ("inv-minus", "plus", "inv-plus", "minus")
WEIGHTS = ("count", "sum")
SIGNS = ("minus-denominator", "plus-denominator")


class TruncationMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


@dataclass(frozen=True)
class Series:
    """Coefficients c_0..c_N of a power series known up to x**N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series keeps at least the constant term")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], trunc: int | None = None) -> Series:
        cs = [int(c) for c in coeffs]
        if trunc is not None:
            cs = (cs + [0] * (trunc + 1))[: trunc + 1]
        return cls(tuple(cs))

    @classmethod
    def one(cls, trunc: int) -> Series:
        return cls((1,) + (0,) * trunc)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __mul__(self, other):
        return series_mul(self, other)


def _check(f: Series, g: Series):
    if f.trunc != g.trunc:
        raise TruncationMismatch(f"truncation orders differ: {f.trunc} vs {g.trunc}")


def series_add(f: Series, g: Series) -> Series:
    _check(f, g)
    return Series(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def series_sub(f: Series, g: Series) -> Series:
    _check(f, g)
    return Series(tuple(a - b for a, b in zip(f.coeffs, g.coeffs)))


def cauchy(f: Sequence[int], g: Sequence[int], N: int) -> list[int]:
    """First N+1 coefficients of the Cauchy product of two coefficient lists.

    Both inputs must have at least N+1 entries.
    """
    g_rev = list(g[: N + 1])[::-1]
    f = list(f[: N + 1])
    return [sum(map(mul, f[: n + 1], g_rev[N - n :])) for n in range(N + 1)]


def series_mul(f: Series, g: Series) -> Series:
    _check(f, g)
    return Series(tuple(cauchy(f.coeffs, g.coeffs, f.trunc)))


def series_invert(f: Series) -> Series:
    f0 = f.coeffs[0]
    if f0 not in (1, -1):
        raise NotInvertible(f"constant term {f0} is not a unit")
    N = f.trunc
    fs = f.coeffs
    g = [f0]
    # g_n = -f0 * sum_{i=1..n} f_i g_{n-i}; g is built forward, read backward
    for n in range(1, N + 1):
        acc = sum(map(mul, fs[1 : n + 1], reversed(g)))
        g.append(-f0 * acc)
    return Series(tuple(g))


def _parts(s: PartSet | Iterable[int], N: int) -> list[int]:
    if isinstance(s, PartSet):
        return elements_up_to(s, N) if N >= 1 else []
    return sorted(a for a in set(s) if 1 <= a <= N)


def product_family(s: PartSet | Iterable[int], N: int, mode: str) -> Series:
    """Truncated product over a in A of (1-x^a)^-1, (1+x^a), (1+x^a)^-1 or (1-x^a).

    ``s`` may also be a plain iterable of parts (used for truncated A∖{b}).
    """
    if mode not in PRODUCT_MODES:
        raise ValueError(f"unknown product mode {mode!r}")
    c = [1] + [0] * N
    for a in _parts(s, N):
        if mode == "inv-minus":
            for n in range(a, N + 1):
                c[n] += c[n - a]
        elif mode == "inv-plus":
            for n in range(a, N + 1):
                c[n] -= c[n - a]
        elif mode == "plus":
            for n in range(N, a - 1, -1):
                c[n] += c[n - a]
        else:
            for n in range(N, a - 1, -1):
                c[n] -= c[n - a]
    return Series(tuple(c))


def lambert_sum(s: PartSet | Iterable[int], N: int, weight: str = "count",
                sign: str = "minus-denominator") -> Series:
    """Sum over a in A of a^w x^a / (1 ∓ x^a), constant term 0."""
    if weight not in WEIGHTS or sign not in SIGNS:
        raise ValueError(f"bad lambert parameters {weight!r}, {sign!r}")
    c = [0] * (N + 1)
    alternate = sign == "plus-denominator"
    for a in _parts(s, N):
        w = a if weight == "sum" else 1
        for j, n in enumerate(range(a, N + 1, a)):
            c[n] += -w if alternate and j % 2 else w
    return Series(tuple(c))
