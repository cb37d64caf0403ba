from math import factorial

import pytest
from hypothesis import given, strategies as st

from partcount.arith import (
    SIGMA,
    SIGMA_S,
    TAU,
    TAU_S,
    DivisorFnKind,
    distinct_odd_count,
    distinct_odd_counts,
    distinct_prime_count,
    divisor_fn,
    factorial_valuation,
    hamming_weight,
    p_adic_valuation,
    pentagonal_omega,
)
from partcount.oracle import enumerate_partitions
from partcount.partsets import BINARY, NATURALS, ODDS, PRIMES, ppowers
from partcount.series import product_family


def brute_divisor_sum(n, members, weight, signed):
    total = 0
    for a in range(1, n + 1):
        if n % a == 0 and a in members:
            term = a if weight == "sum" else 1
            total += (-1) ** (n // a - 1) * term if signed else term
    return total


@pytest.mark.parametrize(
    ("kind", "s", "n", "expected"),
    [
        (TAU, NATURALS, 6, 4),
        (SIGMA, NATURALS, 6, 12),
        (TAU_S, NATURALS, 6, 0),
        (SIGMA_S, NATURALS, 6, 4),
        (TAU, PRIMES, 12, 2),
        (TAU, BINARY, 12, 3),
        (TAU_S, NATURALS, 4, -1),
    ],
)
def test_divisor_fn_examples(kind, s, n, expected):
    assert divisor_fn(kind, s, n) == expected


@pytest.mark.parametrize("kind", [TAU, SIGMA, TAU_S, SIGMA_S], ids=lambda k: k.name)
@pytest.mark.parametrize("s", [NATURALS, PRIMES, ODDS, ppowers(3)], ids=str)
def test_divisor_fn_brute_force(kind, s):
    from partcount.partsets import elements_up_to
    members = set(elements_up_to(s, 150))
    for n in range(1, 151):
        assert divisor_fn(kind, s, n) == brute_divisor_sum(n, members, kind.weight, kind.signed)


def test_kind_names():
    assert [k.name for k in (TAU, TAU_S, SIGMA, SIGMA_S)] == ["tau", "tau-s", "sigma", "sigma-s"]
    with pytest.raises(ValueError):
        DivisorFnKind("mean", False)


def test_binary_substitutions():
    for n in range(1, 10_001):
        v = p_adic_valuation(2, n)
        assert divisor_fn(TAU_S, BINARY, n) == 1 - v
        assert divisor_fn(SIGMA, BINARY, n) == 2 ** (v + 1) - 1


def test_tau_over_primes_counts_distinct_primes():
    # 4 = 2*2 has one prime divisor in A, not two
    assert divisor_fn(TAU, PRIMES, 4) == 1
    for n in range(1, 500):
        assert divisor_fn(TAU, PRIMES, n) == distinct_prime_count(n)


@pytest.mark.parametrize(("n", "h"), [(7, 3), (8, 1), (0, 0), (255, 8)])
def test_hamming(n, h):
    assert hamming_weight(n) == h


@pytest.mark.parametrize(("p", "n", "v"), [(2, 12, 2), (3, 1, 0), (2, 8, 3), (5, 250, 3)])
def test_valuation(p, n, v):
    assert p_adic_valuation(p, n) == v


def test_valuation_rejects_composite():
    with pytest.raises(ValueError):
        p_adic_valuation(4, 8)


@given(st.integers(0, 300), st.sampled_from([2, 3, 5, 7]))
def test_legendre_matches_factorial(n, p):
    f = factorial(n)
    v = 0
    while f % p == 0:
        f //= p
        v += 1
    assert factorial_valuation(p, n) == v


def test_pentagonal_omega_examples():
    assert pentagonal_omega(0) == 1
    assert pentagonal_omega(5) == 1
    assert pentagonal_omega(12) == -1
    assert pentagonal_omega(3) == 0


def test_pentagonal_omega_support():
    gen_pent = {}
    for k in range(1, 30):
        for m in ((3 * k * k - k) // 2, (3 * k * k + k) // 2):
            gen_pent[m] = (-1) ** k
    for m in range(1, 301):
        assert pentagonal_omega(m) == gen_pent.get(m, 0)
    euler = product_family(NATURALS, 300, "minus").coeffs
    assert [pentagonal_omega(m) for m in range(301)] == list(euler)


def test_distinct_odd_count():
    assert distinct_odd_count(8, 10) == 2
    assert distinct_odd_count(0, 0) == 1
    assert distinct_odd_count(2, 5) == 0
    with pytest.raises(ValueError):
        distinct_odd_count(6, 5)


def test_distinct_odd_count_by_enumeration():
    for m in range(26):
        assert distinct_odd_count(m, 30) == len(enumerate_partitions(m, ODDS, distinct=True))


def test_signed_odd_counts_match_inverse_plus_product():
    o = distinct_odd_counts(300)
    inv_plus = product_family(NATURALS, 300, "inv-plus").coeffs
    assert [(-1) ** m * o[m] for m in range(301)] == list(inv_plus)
