"""Command line interface: argument handling, output shapes, exit codes."""

import json

import resdet.cli as cli
import resdet.verify as verify
from resdet.selftest import SuiteResult
from resdet.verify import VIOLATED, CheckInfo, VerificationRecord


def _json_lines(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.strip().splitlines()]


def test_det_json(capsys):
    rc = cli.main(
        ["det", "--p", "5", "--k", "2", "--n", "3", "--d", "-1", "--exact", "--pfaffian"]
    )
    assert rc == 0
    (rec,) = _json_lines(capsys)
    assert rec == {
        "p": 5,
        "k": 2,
        "n": 3,
        "d": -1,
        "q": 2,
        "det": 4,
        "exact": "729",
        "pfaffian": 3,
    }


def test_det_table(capsys):
    rc = cli.main(["det", "--p", "5", "--k", "2", "--n", "5", "--d", "-1", "--exact"])
    assert rc == 0
    json_det = _json_lines(capsys)[0]
    assert json_det["exact"] == "59049"
    rc = cli.main(
        ["det", "--p", "5", "--k", "2", "--n", "5", "--d", "-1", "--format", "table"]
    )
    assert rc == 0
    line = capsys.readouterr().out.strip()
    assert "det=4" in line and "q=2" in line


def test_det_rejects_composite_modulus(capsys):
    rc = cli.main(["det", "--p", "15", "--k", "2", "--n", "1", "--d", "1"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_verify_clean_run(capsys):
    rc = cli.main(["verify", "QR", "--pmax", "13", "--jobs", "1"])
    assert rc == 0
    lines = _json_lines(capsys)
    assert lines[-1] == {
        "summary": "QR",
        "attempted": 10,
        "holds": 10,
        "violated": 0,
        "inapplicable": 0,
    }
    assert all(rec["check"] == "QR" for rec in lines[:-1])


def test_verify_violation_exit_code(capsys, monkeypatch):
    def stub(p, opts):
        return [VerificationRecord(check="QR", verdict=VIOLATED, p=p, note="stub")]

    monkeypatch.setitem(
        verify.CHECKS, "QR", CheckInfo(worker=stub, default_pmax=13, description="stub")
    )
    rc = cli.main(["verify", "QR", "--pmax", "13", "--jobs", "1"])
    assert rc == 1
    lines = _json_lines(capsys)
    assert lines[-1]["violated"] == 5
    assert lines[0]["note"] == "stub"


def test_verify_option_passthrough(capsys):
    rc = cli.main(
        ["verify", "L26", "--pmax", "31", "--klist", "2", "--dlist", "1,30", "--jobs", "1"]
    )
    assert rc == 0
    lines = _json_lines(capsys)
    assert all(rec.get("k") == 2 for rec in lines[:-1])


def test_ekm_criterion_only(capsys):
    rc = cli.main(["ekm", "--k", "2", "--m", "13", "--criterion-only"])
    assert rc == 0
    (rec,) = _json_lines(capsys)
    assert rec["route"] == "criterion"
    assert rec["members"] == [17, 109, 401, 29629, 924397]
    assert rec["members_within_bound"] == [17, 109, 401]
    assert rec["criterion_integers"][0] == "58917607974225"
    head = rec["factorizations"][0]
    assert head["factors"] == [
        ["3", 6],
        ["5", 2],
        ["7", 1],
        ["11", 1],
        ["13", 1],
        ["109", 1],
        ["29629", 1],
    ]
    assert rec["unfactored_cofactors"] == []


def test_ekm_scan_only_m1(capsys):
    rc = cli.main(["ekm", "--k", "2", "--m", "1", "--scan-only", "--bound", "500"])
    assert rc == 0
    (rec,) = _json_lines(capsys)
    assert rec["route"] == "scan"
    assert rec["members"] == []


def test_ekm_both_routes(capsys):
    rc = cli.main(["ekm", "--k", "2", "--m", "5", "--bound", "200"])
    assert rc == 0
    crit, scan, agree = _json_lines(capsys)
    assert crit["route"] == "criterion" and scan["route"] == "scan"
    assert scan["members"] == crit["members_within_bound"] == [29]
    assert agree == {"routes_agree_within_bound": True}


def test_ekm_rejects_even_m(capsys):
    rc = cli.main(["ekm", "--k", "2", "--m", "4"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_char_all_k(capsys):
    rc = cli.main(["char", "--p", "13", "--d", "2"])
    assert rc == 0
    lines = _json_lines(capsys)
    assert [rec["k"] for rec in lines] == [2, 3, 4, 6]
    assert lines[0] == {"p": 13, "k": 2, "d": 2, "raw": 12, "kind": "minus-one"}


def test_char_single_k(capsys):
    rc = cli.main(["char", "--p", "13", "--d", "26", "--k", "2"])
    assert rc == 0
    (rec,) = _json_lines(capsys)
    assert rec["kind"] == "zero" and rec["raw"] == 0


def test_char_rejects_composite(capsys):
    assert cli.main(["char", "--p", "14", "--d", "2"]) == 2
    capsys.readouterr()


def test_selftest_ok(capsys, monkeypatch):
    monkeypatch.setattr(
        cli, "run_selftest", lambda: [SuiteResult("stub-suite", 7, [])]
    )
    rc = cli.main(["selftest"])
    assert rc == 0
    (rec,) = _json_lines(capsys)
    assert rec == {"suite": "stub-suite", "checks": 7, "ok": True}


def test_selftest_failure_lists_first_five(capsys, monkeypatch):
    fails = [f"case {i}" for i in range(9)]
    monkeypatch.setattr(
        cli, "run_selftest", lambda: [SuiteResult("stub-suite", 9, fails)]
    )
    rc = cli.main(["selftest"])
    assert rc == 1
    (rec,) = _json_lines(capsys)
    assert rec["ok"] is False
    assert rec["failures"] == fails[:5]
