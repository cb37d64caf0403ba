import json

import pytest

from partcount.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--set", "naturals", "--fn", "np", "--n-max", "5")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["fn"] == "np" and d["set"] == "naturals"
    assert [r["value"] for r in d["rows"]] == ["1", "3", "6", "12", "20"]


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--set", "finite:1,2", "--fn", "p", "--n-max", "4",
                       "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,2", "3,2", "4,3"]


@pytest.mark.parametrize("fn", ["q", "nq", "p-parity-diff", "q-parity-diff", "tau", "tau-s",
                                "sigma", "sigma-s", "cl", "hamming", "vp"])
def test_every_function_runs(capsys, fn):
    code, out, _ = run(capsys, "compute", "--fn", fn, "--n-max", "12")
    assert code == EXIT_OK
    assert json.loads(out)["rows"]


def test_compute_to_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "compute", "--fn", "cl", "--n-max", "6", "--out", str(path))
    assert code == EXIT_OK and out == ""
    assert [r["value"] for r in json.loads(path.read_text())["rows"]] == ["1", "1", "1", "3", "4", "7", "14"]


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--fn", "zeta", "--n-max", "5"],
        ["compute", "--set", "finite:1,x", "--fn", "p", "--n-max", "5"],
        ["compute", "--fn", "p", "--n-max", "0"],
        ["compute", "--fn", "vp", "--prime", "4", "--n-max", "5"],
        ["verify", "--identity", "T2.3a", "--set", "naturals"],
        ["verify", "--identity", "bogus"],
        ["asymptotics", "--set", "finite:2,4"],
        ["asymptotics", "--set", "primes"],
        ["asymptotics", "--set", "finite:1,2", "--l-max", "3"],
        ["oracle-diff", "--set", "finite:1,2", "--n-max", "41"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("partcount: error:")


def test_gcd_message(capsys):
    _, _, err = run(capsys, "asymptotics", "--set", "finite:2,4")
    assert "gcd(A) must be 1" in err


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "C-hamming", "--n-max", "1000")
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "all-hold"


def test_verify_reports_failure(capsys, monkeypatch):
    import partcount.identities as ids

    monkeypatch.setattr(ids.Ingredients, "divisor",
                        lambda self, kind, s, n: ids.arith.divisor_fn(kind, s, n) + (n == 7))
    code, out, _ = run(capsys, "verify", "--identity", "T2.1b", "--set", "naturals", "--n-max", "20")
    assert code == EXIT_FAIL
    assert json.loads(out)["first_failure"]["n"] == 7


def test_asymptotics_output(capsys):
    code, out, _ = run(capsys, "asymptotics", "--set", "finite:1,2", "--target", "both",
                       "--ratio-n", "50,100")
    assert code == EXIT_OK
    lines = [json.loads(x) for x in out.splitlines()]
    checks = [x for x in lines if "match" in x]
    assert len(checks) == 4 and all(x["match"] for x in checks)
    assert [x["n"] for x in lines if "ratio" in x] == [50, 100]


def test_oracle_diff(capsys):
    code, out, _ = run(capsys, "oracle-diff", "--set", "primes", "--n-max", "15")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 16


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == EXIT_OK
    assert any(line.startswith("T2.1b\t") for line in out.splitlines())


def test_verify_all_deterministic(capsys):
    first = run(capsys, "verify", "--identity", "all", "--n-max", "60")
    second = run(capsys, "verify", "--identity", "all", "--n-max", "60")
    assert first == second
    assert first[0] == EXIT_OK
