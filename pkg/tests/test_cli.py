from __future__ import annotations

import json

from uqplus import pbw
from uqplus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--n", "2", "x2*x1")
    assert code == 0
    assert out.strip() == "-q*e[1,3] + q*x1*x2"


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--n", "2", "nf", "x1*x2 - q^-1*x2*x1")
    assert code == 0
    assert out.strip() == "e[1,3]"


def test_coproduct_and_antipode(capsys):
    _, out, _ = run(capsys, "coproduct", "e[1,3]")
    assert out.strip() == "1 (x) e[1,3] + e[1,3] (x) 1 + (-q^-2 + 1)*x1 (x) x2"
    _, out, _ = run(capsys, "antipode", "e[1,3]")
    assert out.strip() == "-e[1,3] + (-q^-2 + 1)*x1*x2"


def test_counit_and_sigma(capsys):
    _, out, _ = run(capsys, "counit", "2 - q + x1")
    assert out.strip() == "2 - q"
    _, out, _ = run(capsys, "sigma", "x1", "x2")
    assert out.strip() == "q^-1*x2 (x) x1"


def test_json_output(capsys):
    code, out, _ = run(capsys, "nf", "--format", "json", "x2*x1")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "nf" and data["n"] == 2
    assert data["result"][0]["monomial"] == [[1, 3, 1]]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "nf", "x1 +")
    assert code == 2
    assert "position 4" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "nf", "--n", "0", "x1")[0] == 2


def test_max_rank(capsys, monkeypatch):
    monkeypatch.setattr(pbw, "MAX_RANK", 16)
    assert run(capsys, "nf", "--n", "5", "--max-rank", "4", "x1")[0] == 2
    code, out, _ = run(capsys, "nf", "--n", "17", "--max-rank", "20", "x17")
    assert code == 0 and out.strip() == "x17"


def test_verify_all_is_deterministic(capsys, tmp_path):
    argv = ["verify", "all", "--n", "2", "--degree", "4", "--seed", "1", "--format", "json"]
    code1, out1, _ = run(capsys, *argv, "--out", str(tmp_path / "r.json"))
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert (tmp_path / "r.json").read_text() == out1
    data = json.loads(out1)
    assert data["ok"] and all(r["failures"] == [] for r in data["reports"])


def test_verify_qbinomial(capsys):
    code, out, _ = run(capsys, "verify", "qbinomial", "--m-max", "12")
    assert code == 0
    assert "q-binomial-alternating" in out


def test_verify_pbw_rank_one(capsys):
    code, out, _ = run(capsys, "verify", "pbw", "--n", "1", "--degree", "8")
    assert code == 0
    assert "pbw-certificate" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from uqplus import report, suites

    def broken(n, degree, seed, samples, **_):
        r = report.Report("broken", n)
        r.record(False, "forced failure")
        return [r]

    monkeypatch.setitem(suites.SUITES, "counit", broken)
    code, out, _ = run(capsys, "verify", "counit")
    assert code == 1
    assert "FAIL" in out


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "uqplus", "nf", "x2*x1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-q*e[1,3] + q*x1*x2"
