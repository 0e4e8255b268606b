import io
import json
import subprocess
import sys

import pytest

from nzcgraph.cli import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, parse_int_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_int_list():
    assert parse_int_list("2,3") == [2, 3]
    assert parse_int_list("2..5") == [2, 3, 4, 5]
    assert parse_int_list("1,3..4") == [1, 3, 4]


def test_indices_json(capsys):
    code, out, _ = run(capsys, "indices", "--q", "2", "--n", "3", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["m1"] == "138" and d["forgotten"] == "672"


def test_indices_quotient_method(capsys):
    code, out, _ = run(capsys, "indices", "--q", "7", "--n", "8")
    assert code == EXIT_OK
    assert json.loads(out)["method"] == "quotient"


def test_build_edgelist(capsys):
    code, out, _ = run(capsys, "build", "--q", "2", "--n", "2", "--format", "edgelist")
    assert code == EXIT_OK
    assert out == "0 2\n1 2\n"


def test_build_cap_error_names_cap(capsys):
    code, _, err = run(capsys, "build", "--q", "3", "--n", "4", "--explicit-cap", "20")
    assert code == EXIT_ERROR
    assert "20" in err


def test_build_quotient_fallback(capsys):
    code, out, _ = run(capsys, "build", "--q", "3", "--n", "4", "--explicit-cap", "20",
                       "--allow-quotient-fallback")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["vertex_count"] == "80" and len(d["classes"]) == 15


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("NZC_EXPLICIT_CAP", "2")
    code, _, _ = run(capsys, "build", "--q", "2", "--n", "2")
    assert code == EXIT_ERROR


def test_nonprime_power_warning(capsys):
    code, _, err = run(capsys, "build", "--q", "6", "--n", "1")
    assert code == EXIT_OK and "prime power" in err
    code, _, err = run(capsys, "build", "--q", "6", "--n", "1", "--no-warn-nonprimepower")
    assert err == ""


def test_audit_exit_status(capsys):
    code, out, _ = run(capsys, "audit", "--q", "2,3", "--n", "1,2,3", "--format", "markdown",
                       "--workers", "1")
    assert code == EXIT_MISMATCH
    assert "REFUTED" in out


def test_formulas_exit_zero(capsys):
    code, _, _ = run(capsys, "formulas", "--q", "2", "--n", "2", "--id", "OBS1_ORDER")
    assert code == EXIT_OK


def test_formulas_json(capsys):
    code, out, _ = run(capsys, "formulas", "--q", "2", "--n", "2", "--id", "THM_M1_GAMMA",
                       "--id", "THM_M1_T2", "--m2", "4")
    rows = json.loads(out)
    assert [r["value"] for r in rows] == ["120", "258"]
    assert rows[1]["m2_injected"] == "4"


def test_formulas_injects_computed_m2(capsys):
    _, out, _ = run(capsys, "formulas", "--q", "2", "--n", "2", "--id", "THM_M1_LINE")
    assert json.loads(out)[0]["m2_injected"] == "4"


def test_derived_and_export(capsys, tmp_path):
    code, out, _ = run(capsys, "derived", "--q", "2", "--n", "2", "--transform", "para-line")
    assert code == EXIT_OK and out == "0 2\n1 3\n2 3\n"
    path = tmp_path / "g.txt"
    path.write_text(out)
    code, again, _ = run(capsys, "export", "--input", str(path), "--format", "edgelist")
    assert again == out
    code, dot, _ = run(capsys, "export", "--input", str(path), "--format", "dot")
    assert dot.startswith("graph G {")
    code, out, _ = run(capsys, "derived", "--input", str(path), "--transform", "line",
                       "--bundle")
    assert json.loads(out)["edge_count"] == "2"


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "indices", "--q", "2", "--n", "2", "--output", str(target))
    assert code == EXIT_OK and out == ""
    assert json.loads(target.read_text())["co_m2"] == "1"


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sweep\nq=2\nn=3\nformat=json\n")
    _, out, _ = run(capsys, "indices", "--config", str(cfg))
    assert json.loads(out)["m1"] == "138"
    _, out, _ = run(capsys, "indices", "--config", str(cfg), "--n", "2")
    assert json.loads(out)["m1"] == "6"


@pytest.mark.parametrize("argv", [
    ["build", "--q", "2"],
    ["derived", "--q", "2", "--n", "2"],
    ["audit", "--q", "2", "--n", "2", "--format", "dot"],
    ["build", "--q", "2..3", "--n", "2"],
    ["nonsense"],
    ["indices", "--q", "x", "--n", "2"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nzcgraph", "build", "--q", "2", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "0 2\n1 2\n"


def test_text_only_stdout(monkeypatch):
    buf = io.StringIO()
    monkeypatch.setattr(sys, "stdout", buf)
    assert main(["build", "--q", "2", "--n", "2"]) == EXIT_OK
    assert buf.getvalue() == "0 2\n1 2\n"
