"""Command line interface: JSON output shape, exit codes and determinism."""

import json

import pytest

from gkzeuler import cli


def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_triangulate_json_and_exit_ok(capsys):
    code, out = _run(capsys, ["triangulate", "--config", "gamma2",
                              "--omega", "7,1,2,5"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["config"] == "gamma2"
    assert all(isinstance(s, list) for s in doc["simplices"])
    assert isinstance(doc["convergent"], bool)


def test_triangulate_bad_omega_length(capsys):
    code, _ = _run(capsys, ["triangulate", "--config", "gamma2",
                            "--omega", "1,2"])
    assert code == cli.EXIT_BAD_INPUT


def test_triangulate_degenerate_lifting(capsys):
    code, _ = _run(capsys, ["triangulate", "--config", "gamma2",
                            "--omega", "0,0,0,0"])
    assert code == cli.EXIT_DEGENERATE


def test_unknown_config(capsys):
    code, _ = _run(capsys, ["triangulate", "--config", "doesnotexist",
                            "--omega", "1,2,3,4"])
    assert code == cli.EXIT_BAD_INPUT


def test_fan_scan_counts(capsys):
    code, out = _run(capsys, ["fan-scan", "--config", "gamma2",
                              "--samples", "300"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 3
    assert len(doc["triangulations"]) == 3


def test_fan_scan_deterministic_bytes(capsys):
    argv = ["fan-scan", "--config", "g1", "--samples", "300", "--seed", "5"]
    _, first = _run(capsys, argv)
    _, second = _run(capsys, argv)
    assert first == second


def test_ladders_and_exponents(capsys):
    code, out = _run(capsys, ["ladders", "--k", "2", "--n", "5",
                              "--ctilde=-1.5,0.1,0.2,0.3,0.4,0.5"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 6
    assert len(doc["exponents"]) == 6
    for ex in doc["exponents"]:
        assert all("," in key for key in ex)


def test_series_trusted_and_numeric_exit(capsys):
    base = ["series", "--config", "gauss", "--sigma", "1,2,3",
            "--delta", "0.377,0.211,0.613"]
    code, out = _run(capsys, base + ["--z", "1,1,1,0.05", "--order", "12"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["trusted"] is True
    assert isinstance(doc["value"], list) and len(doc["value"]) == 2
    code, _ = _run(capsys, base + ["--z", "1,1,1,2.5", "--order", "30"])
    assert code == cli.EXIT_NUMERIC


def test_series_non_generic_parameter(capsys):
    code, _ = _run(capsys, ["series", "--config", "gauss",
                            "--sigma", "1,2,3", "--delta", "1,2,3",
                            "--z", "1,1,1,0.05", "--order", "8"])
    assert code == cli.EXIT_DEGENERATE


def test_verify_case_ok(capsys):
    code, out = _run(capsys, ["verify", "--case", "gauss", "--seed", "1"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["residual"] < doc["tol"]


def test_identities_exact(capsys):
    code, out = _run(capsys, ["identities", "--degree", "6", "--seed", "2"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["ok"] is True
    assert all(row["gauss_defect"] == "0" and row["kummer_defect"] == "0"
               for row in doc["identities"])


def test_report_all_cases(capsys, monkeypatch):
    monkeypatch.setenv("GKZ_EULER_THREADS", "4")
    code, out = _run(capsys, ["report", "--seed", "0"])
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc["ok"] is True
    assert sorted(r["case"] for r in doc["cases"]) == sorted(
        ["gauss", "kummer", "f1", "phi1", "e36", "e36c", "ag", "confluent"])


def test_out_file(tmp_path, capsys):
    target = tmp_path / "ladders.json"
    code, out = _run(capsys, ["ladders", "--k", "1", "--n", "3",
                              "--out", str(target)])
    assert code == cli.EXIT_OK
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc["count"] == 2


def test_config_from_json_file(tmp_path, capsys):
    doc = {"k": 1, "n": 1, "blocks": [[], [[0, 1]]]}
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(doc))
    code, out = _run(capsys, ["triangulate", "--config", str(path),
                              "--omega", "3,1"])
    assert code == cli.EXIT_OK
    assert json.loads(out)["simplices"]


def test_entry_raises_system_exit():
    with pytest.raises(SystemExit):
        cli.entry()
