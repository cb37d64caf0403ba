import pytest
from hypothesis import given, settings, strategies as st

from partcount.arith import hamming_weight
from partcount.partitions import (
    np_recurrence_over_A,
    np_table_conv,
    np_table_gf,
    nq_recurrence_over_A,
    nq_table_conv,
    nq_table_gf,
    p_table,
    parity_diff_table,
    parity_split,
    part_multiplicity,
    q_table,
)
from partcount.partsets import BINARY, NATURALS, ODDS, PRIMES, DomainError, PartSet, elements_up_to, ppowers

CATALOG = [NATURALS, PartSet.finite([1, 2]), PartSet.finite([2, 3]), PartSet.finite([1, 2, 3]),
           PartSet.finite([3, 4, 5]), PRIMES, BINARY, ppowers(3), ODDS]


def test_small_tables():
    assert p_table(NATURALS, 7).values == (1, 1, 2, 3, 5, 7, 11, 15)
    assert q_table(NATURALS, 7).values == (1, 1, 1, 2, 2, 3, 4, 5)
    assert np_table_gf(NATURALS, 5).values[1:] == (1, 3, 6, 12, 20)
    assert nq_table_gf(NATURALS, 6).values[1:] == (1, 1, 3, 3, 5, 8)
    assert np_table_gf(PartSet.finite([1, 2]), 4).values[1:] == (1, 3, 5, 9)
    assert p_table(PRIMES, 10).values[10] == 5


def test_parity_examples():
    # 4 = 4 | 3+1 | 2+2 | 2+1+1 | 1+1+1+1 -> +1 -2 +2
    assert parity_diff_table(NATURALS, 4, "partition")[4] == 1
    assert parity_diff_table(NATURALS, 4, "distinct")[4] == 0
    even, odd = parity_split(NATURALS, 4, "partition")
    assert (even[4], odd[4]) == (3, 2)


def test_table_labels_and_rows():
    t = np_table_gf(PartSet.finite([1, 2]), 3)
    assert (t.fn, t.set) == ("np", "finite:1,2")
    assert t.rows(1) == [(1, 1), (2, 3), (3, 5)]


def test_bad_flavor():
    with pytest.raises(ValueError):
        parity_diff_table(NATURALS, 5, "odd")
    with pytest.raises(ValueError):
        part_multiplicity(NATURALS, 1, 5, "odd")


@pytest.mark.parametrize("s", CATALOG, ids=str)
def test_generating_function_matches_convolution(s):
    N = 500
    assert np_table_gf(s, N).values == np_table_conv(s, N).values
    assert nq_table_gf(s, N).values == nq_table_conv(s, N).values


def test_multiplicity_examples():
    # partitions of 4 contain the part 1 in total 0+1+0+2+4 = 7 times
    assert part_multiplicity(NATURALS, 1, 4)[4] == 7
    assert part_multiplicity(NATURALS, 2, 4, "distinct")[4] == 0
    assert part_multiplicity(NATURALS, 1, 4, "distinct")[4] == 1
    with pytest.raises(DomainError):
        part_multiplicity(PRIMES, 4, 10)


@pytest.mark.parametrize("s", CATALOG, ids=str)
def test_multiplicities_sum_to_totals(s):
    N = 120
    for flavor, table in (("partition", np_table_gf), ("distinct", nq_table_gf)):
        total = [0] * (N + 1)
        for b in elements_up_to(s, N):
            for n, v in enumerate(part_multiplicity(s, b, N, flavor).values):
                total[n] += v
        assert tuple(total) == table(s, N).values


def test_binary_distinct_partitions():
    N = 10_000
    q = q_table(BINARY, N).values
    nq = nq_table_gf(BINARY, N).values
    assert set(q) == {1}
    assert all(nq[n] == hamming_weight(n) for n in range(N + 1))


@pytest.mark.parametrize("s", CATALOG, ids=str)
def test_orderings(s):
    N = 200
    p, q = p_table(s, N).values, q_table(s, N).values
    np_, nq = np_table_gf(s, N).values, nq_table_gf(s, N).values
    pd = parity_diff_table(s, N, "partition").values
    qd = parity_diff_table(s, N, "distinct").values
    for n in range(N + 1):
        assert abs(pd[n]) <= p[n] and abs(qd[n]) <= q[n]
        assert (pd[n] - p[n]) % 2 == 0
        assert np_[n] >= nq[n] >= 0
        assert q[n] <= p[n]


@pytest.mark.parametrize("s", CATALOG, ids=str)
def test_recurrences_over_A(s):
    for x in elements_up_to(s, 12)[:4]:
        assert np_recurrence_over_A(s, x, 150).ok
        assert nq_recurrence_over_A(s, x, 150).ok


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(1, 12), min_size=1, max_size=4))
def test_random_finite_sets_dual_route(elements):
    s = PartSet.finite(elements)
    assert np_table_gf(s, 80).values == np_table_conv(s, 80).values
    assert nq_table_gf(s, 80).values == nq_table_conv(s, 80).values
