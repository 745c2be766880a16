import json
import subprocess
import sys

from hopflab.cli import main


def run(*args):
    return main(list(args))


def test_eval_prints_normal_form(capsys):
    assert run("eval", "b*a - q*a*b", "--model", "cq_su2") == 0
    assert capsys.readouterr().out.strip() == "0"


def test_eval_coproduct(capsys):
    assert run("eval", "X_+", "--model", "uq_su2", "--apply", "coproduct") == 0
    assert capsys.readouterr().out.strip() == "tensor(K^-1, X_+) + tensor(X_+, K)"


def test_usage_errors_exit_2(capsys):
    assert run("eval", "X_+ +", "--model", "uq_su2") == 2
    assert run("eval", "X_+", "--model", "nosuch") == 2
    assert run("verify", "nosuch") == 2
    assert run("verify", "qybe", "--mode", "exact-lambda") == 2
    assert "error" in capsys.readouterr().err


def test_verify_writes_json(tmp_path, capsys):
    out = tmp_path / "cybe.json"
    assert run("verify", "cybe", "--json", str(out)) == 0
    data = json.loads(out.read_text())
    assert set(data) == {"suite", "model", "mode", "order", "checks"}
    assert data["suite"] == "cybe"
    assert all(c["status"] == "pass" for c in data["checks"])
    labels = [(c["paper_label"], c["name"]) for c in data["checks"]]
    assert labels == sorted(labels)


def test_failing_suite_exits_1(capsys):
    assert run("verify", "double-relations") == 1
    assert "FAIL" in capsys.readouterr().out


def test_export_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("export", "model", "u_su2", "-o", str(a)) == 0
    assert run("export", "model", "u_su2", "-o", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    assert run("export", "lie", "su2_ds", "-o", str(a)) == 0
    assert json.loads(a.read_text())["basis"] == ["H", "X_+", "X_-"]


def test_empty_report_json():
    from hopflab.report import Report

    assert json.loads(Report("empty").to_json())["checks"] == []


def test_list_and_console_script(capsys):
    assert run("list", "suites") == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 19
    proc = subprocess.run([sys.executable, "-m", "hopflab.cli", "list", "models"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "uq_su2" in proc.stdout
