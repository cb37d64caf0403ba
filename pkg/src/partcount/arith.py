"""Direct evaluation of the divisor-type and digit functions (no series)."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .partsets import ODDS, PartSet, contains, is_prime
from .series import product_family


@dataclass(frozen=True)
class DivisorFnKind:
    weight: str = "count"  # "count" or "sum"
    signed: bool = False

    def __post_init__(self):
        if self.weight not in ("count", "sum"):
            raise ValueError(f"weight must be 'count' or 'sum', got {self.weight!r}")

    @property
    def name(self) -> str:
        base = "tau" if self.weight == "count" else "sigma"
        return base + ("-s" if self.signed else "")


TAU = DivisorFnKind("count", False)
TAU_S = DivisorFnKind("count", True)
SIGMA = DivisorFnKind("sum", False)
SIGMA_S = DivisorFnKind("sum", True)


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def divisor_fn(kind: DivisorFnKind, s: PartSet, n: int) -> int:
    """Sum over a | n, a in A of (-1)^(n/a - 1) a^w, the sign only when ``kind.signed``."""
    if n < 1:
        raise ValueError(f"divisor functions start at n = 1, got {n}")
    total = 0
    for a in divisors(n):
        if not contains(s, a):
            continue
        term = a if kind.weight == "sum" else 1
        if kind.signed and (n // a) % 2 == 0:
            term = -term
        total += term
    return total


def hamming_weight(n: int) -> int:
    if n < 0:
        raise ValueError("hamming weight of a negative integer")
    return n.bit_count()


def p_adic_valuation(p: int, n: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"valuation only defined here for positive integers, got {n}")
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return r


def factorial_valuation(p: int, n: int) -> int:
    """Exponent of p in n!, by Legendre's formula."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r, q = 0, p
    while q <= n:
        r += n // q
        q *= p
    return r


def distinct_prime_count(n: int) -> int:
    """Number of distinct primes dividing n, by trial division."""
    count, d = 0, 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            while n % d == 0:
                n //= d
        d += 1
    return count + (n > 1)


def pentagonal_omega(m: int) -> int:
    """1 at m = 0, (-1)^k at m = (3k^2 ± k)/2, else 0."""
    if m < 0:
        raise ValueError("pentagonal weight of a negative integer")
    if m == 0:
        return 1
    disc = 1 + 24 * m
    root = isqrt(disc)
    if root * root != disc:
        return 0
    # 3k^2 ± k - 2m = 0  =>  k = (∓1 + root) / 6
    for num in (root + 1, root - 1):
        if num % 6 == 0:
            k = num // 6
            return -1 if k % 2 else 1
    return 0


def distinct_odd_count(m: int, trunc: int) -> int:
    """Number of partitions of m into distinct odd parts."""
    if not 0 <= m <= trunc:
        raise ValueError(f"need 0 <= m <= trunc, got m={m}, trunc={trunc}")
    return product_family(ODDS, trunc, "plus")[m]


def distinct_odd_counts(trunc: int) -> list[int]:
    return list(product_family(ODDS, trunc, "plus").coeffs)
