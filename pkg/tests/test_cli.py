import csv
import json

import pytest

from sylowlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_a5(capsys):
    code, out, _ = run(capsys, "analyze", "catalog:A5", "--prime", "2")
    assert code == 0
    assert "n_p = 5" in out and "Frobenius ratio = 4" in out
    assert "ratio^p = 16 >= n_p^(p-1) = 5" in out


def test_analyze_s3_normal_sylow(capsys):
    code, out, _ = run(capsys, "analyze", "--group", "catalog:S3", "--prime", "3")
    assert code == 0
    assert "n_p = 1" in out and "Frobenius ratio = 1" in out


def test_construct_then_analyze_file(capsys, tmp_path):
    path = tmp_path / "gn_2_2_3.json"
    code, out, _ = run(capsys, "construct-gn", "--p", "2", "--n", "2", "--q", "3", "--out", str(path), "--compute")
    assert code == 0
    data = json.loads(path.read_text())
    assert data["degree"] == 9
    assert "order 108" in out and "computed n_p = 27" in out
    code, out, _ = run(capsys, "analyze", f"file:{path}", "--prime", "2", "--json", str(tmp_path / "a.json"))
    assert code == 0
    assert "Frobenius ratio = 7" in out and "n_p = 27" in out
    report = json.loads((tmp_path / "a.json").read_text())
    assert report["primes"][0]["n_p"] == "27"


def test_construct_gn_small_cases(capsys, tmp_path):
    code, out, _ = run(capsys, "construct-gn", "--p", "2", "--n", "1", "--q", "5", "--compute")
    assert code == 0 and "order 10" in out
    code, out, _ = run(capsys, "construct-gn", "--p", "2", "--n", "1", "--q", "3", "--asymptotics")
    assert code == 0 and "quotient tends to 1" in out


def test_construct_gn_invalid(capsys):
    code, _, err = run(capsys, "construct-gn", "--p", "3", "--n", "1", "--q", "5")
    assert code == 2 and "params" in err


def test_load_errors(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", "catalog:nope")
    assert code == 2 and "load" in err
    code, _, err = run(capsys, "analyze", f"file:{tmp_path / 'missing.json'}")
    assert code == 2 and "load" in err
    code, _, err = run(capsys, "analyze", "catalog:S6", "--cap", "100")
    assert code == 2 and "enumerate" in err
    code, _, err = run(capsys, "analyze", "catalog:S3", "--prime", "5")
    assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2
    assert run(capsys, "analyze", "A5", "--prime", "4")[0] == 2
    assert run(capsys, "verify", "--cap", "0")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify_conjectures_a5(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "conjectures", "--group", "catalog:A5")
    assert code == 0
    rows = [l for l in out.splitlines() if l.startswith("conjecture-")]
    assert len(rows) == 6 and all("REPORT_ONLY_HOLDS" in l for l in rows)


def test_verify_gn_forms(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "gn-forms", "--max-order", "200", "--csv", str(tmp_path / "r.csv"))
    assert code == 0
    with open(tmp_path / "r.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["check_id", "group", "p", "status"]
    gn_rows = [r for r in rows if r[0] == "gn-forms"]
    assert {r[1] for r in gn_rows} >= {"G_n(2,1,3)", "G_n(2,2,3)", "G_n(3,1,7)"}
    assert all(r[3] == "PASS" for r in gn_rows)


def test_verify_json_integers_are_strings(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--suite", "frobenius", "--group", "S4", "--json", str(path))
    assert code == 0
    reports = json.loads(path.read_text())
    assert reports and all(isinstance(r["lhs"], str) and isinstance(r["prime"], str) for r in reports)


def test_sweep_matches_verify(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "--suite", "omega-sum", "--max-order", "60", "--json", str(a))[0] == 0
    assert run(capsys, "sweep", "--suite", "omega-sum", "--max-order", "60", "--jobs", "2", "--json", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_findings_block_rendering():
    from sylowlab.checks import CheckReport, Status
    from sylowlab.suite import reports_to_table

    bad = CheckReport("conjecture-ratio", "X", 2, Status.REPORT_ONLY_VIOLATED, 1, 2, "")
    ok = CheckReport("frobenius", "X", 2, Status.PASS, 4, 2, "")
    text = reports_to_table([ok, bad])
    assert text.startswith("=" * 72 + "\nFINDING")
