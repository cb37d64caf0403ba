import json

import pytest

from partcount.arith import TAU
from partcount.identities import (
    DEFAULT_SETS,
    ConstraintError,
    Ingredients,
    UnknownIdentity,
    catalog,
    conv_at,
    get_entry,
    satisfies,
    verify,
    verify_all,
)
from partcount.partsets import BINARY, NATURALS, ODDS, PRIMES, PartSet, ppowers


class PerturbedTau(Ingredients):
    """tau over ℕ off by one at a single n."""

    def __init__(self, at):
        super().__init__()
        self.at = at

    def divisor(self, kind, s, n):
        v = super().divisor(kind, s, n)
        return v + 1 if kind == TAU and s == NATURALS and n == self.at else v


def test_catalog_shape():
    ids = [e.id for e in catalog()]
    assert len(ids) >= 24
    assert len(set(ids)) == len(ids)
    assert "T2.1b" in ids
    assert get_entry("C-hamming").constraint == "ppowers2"
    with pytest.raises(UnknownIdentity):
        get_entry("nope")


def test_verify_examples():
    assert verify("T2.1b", NATURALS, 50).status == "all-hold"
    assert verify("C-hamming", None, 4096).status == "all-hold"
    rep = verify("T2.1b", PartSet.finite([1, 2]), 10)
    assert json.loads(rep.to_json()) == {"id": "T2.1b", "set": "finite:1,2", "n_max": 10,
                                         "status": "all-hold", "first_failure": None}


@pytest.mark.parametrize(
    ("ident", "s"),
    [("C-hamming", NATURALS), ("C-Omega", NATURALS), ("C2.1a", PRIMES),
     ("T2.3a", NATURALS), ("C-vp", PartSet.finite([1, 2]))],
)
def test_constraint_violation(ident, s):
    with pytest.raises(ConstraintError):
        verify(ident, s, 20)


def test_satisfies():
    assert satisfies("ppowers", ppowers(3))
    assert not satisfies("ppowers2", ppowers(3))
    assert satisfies("finite", PartSet.complement_of([2]))
    assert satisfies("any", ODDS)


def test_conv_at():
    assert conv_at([1, 2, 3], [1, 1, 1], 2, 0, 2) == 6
    assert conv_at([1, 2, 3], [1, 1, 1], 2, 1, 2) == 5


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.id)
def test_each_entry_on_defaults(entry):
    sets = entry.default_sets or [s for s in DEFAULT_SETS if satisfies(entry.constraint, s)]
    for s in sets:
        rep = verify(entry.id, s, 120)
        assert rep.status == "all-hold", rep.to_json()


@pytest.mark.parametrize("s", [PartSet.finite([2]), PartSet.finite([1, 2]), PartSet.finite([2, 3])], ids=str)
@pytest.mark.parametrize("ident", ["T2.3a", "T2.3b"])
def test_complement_identities(ident, s):
    assert verify(ident, s, 200).status == "all-hold"


def test_verify_all_with_no_sets_runs_fixed_entries():
    reports = verify_all([], 10)
    assert reports
    ids = {r.id for r in reports}
    assert {"C2.1a", "C-hamming", "T2.3a"} <= ids
    assert "T2.1b" not in ids
    assert all(r.status == "all-hold" for r in reports)


def test_verify_all_marks_skipped():
    reports = verify_all([PRIMES], 30)
    skipped = [r for r in reports if r.status == "skipped"]
    assert any(r.id == "C-hamming" for r in skipped)
    assert all(r.reason for r in skipped)
    assert not any(r.failed for r in reports)


def test_verify_all_order_is_stable():
    a = [r.to_json() for r in verify_all([NATURALS, BINARY], 40)]
    b = [r.to_json() for r in verify_all([NATURALS, BINARY], 40)]
    assert a == b
    order = [e.id for e in catalog()]
    seen = [r.id for r in verify_all([NATURALS], 20)]
    assert seen == sorted(seen, key=order.index)


@pytest.mark.parametrize("at", [1, 17, 60])
def test_failure_injection(at):
    reports = verify_all([NATURALS], 60, ingredients=PerturbedTau(at))
    failed = {r.id for r in reports if r.failed}
    assert failed == {"T2.1b", "C2.1a", "T2.2a", "C-NOP", "T2.4a", "C2.4a"}
    for r in reports:
        if r.failed:
            assert r.first_failure[0] == at


def test_failure_report_json():
    rep = verify("T2.1b", NATURALS, 30, ingredients=PerturbedTau(9))
    d = json.loads(rep.to_json())
    assert d["status"] == "failure"
    assert d["first_failure"]["n"] == 9
    assert int(d["first_failure"]["lhs"]) != int(d["first_failure"]["rhs"])
