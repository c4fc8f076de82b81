"""Command-line interface: exit codes, output formats, determinism."""

import json

import pytest

from diskhall.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_quiver_passes(capsys):
    code, out, _ = run(capsys, "verify-quiver", "--m", "2", "--shifts", "0..1",
                       "--q", "2")
    assert code == 0
    assert "verify-quiver: pass" in out


def test_negative_shift_window_is_accepted(capsys):
    code, out, _ = run(capsys, "verify-quiver", "--m", "2", "--shifts", "-1..1",
                       "--q", "2")
    assert code == 0


def test_json_output_schema(capsys):
    code, out, _ = run(capsys, "verify-quiver", "--m", "2", "--shifts", "0..1",
                       "--q", "2", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema"] == 1
    assert payload["status"] == "pass"
    assert payload["reports"][0]["failed"] == 0


def test_output_is_deterministic(capsys):
    args = ("verify-quiver", "--m", "3", "--shifts", "0..1", "--q", "2",
            "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify-quiver", "--m", "2", "--shifts", "0..0",
                       "--q", "2", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["schema"] == 1


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "verify-quiver", "--m", "1")[0] == 2
    assert run(capsys, "verify-quiver", "--q", "6")[0] == 2
    assert run(capsys, "verify-quiver", "--shifts", "3..1")[0] == 2
    code, _, err = run(capsys, "verify-disk", "--m", "4", "--h", "1,1,1,1")
    assert code == 2
    assert "sum m - 2" in err


def test_verify_disk(capsys):
    code, out, _ = run(capsys, "verify-disk", "--m", "3", "--h", "1,0,0",
                       "--q", "2", "--shifts", "0..1")
    assert code == 0
    assert "cyclic family" in out


def test_multiply_square_fixture(capsys):
    code, out, _ = run(capsys, "multiply", "z[1,0]", "z[1,0]", "--m", "2",
                       "--q", "2")
    assert code == 0
    assert "3*sqrt(2)*[M[1,2) + M[1,2)]" in out


def test_multiply_parse_errors(capsys):
    assert run(capsys, "multiply", "z[9,0]", "z[1,0]", "--m", "3")[0] == 2
    assert run(capsys, "multiply", "w[1,0]", "z[1,0]", "--m", "3")[0] == 2


def test_presentation_single_disk(tmp_path, capsys):
    cfg = tmp_path / "disk.json"
    cfg.write_text(json.dumps({"disks": [{"m": 3, "h": [1, 0, 0]}]}))
    code, out, _ = run(capsys, "presentation", str(cfg), "--q", "2",
                       "--shifts", "0..1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["presentation"]["verifiable"]
    assert payload["reports"][0]["failed"] == 0


def test_presentation_emit_only(tmp_path, capsys):
    cfg = tmp_path / "disk.json"
    cfg.write_text(json.dumps({"disks": [{"m": 3, "h": [0, 1, 0]}]}))
    code, out, _ = run(capsys, "presentation", str(cfg), "--emit-only",
                       "--shifts", "0..0", "--format", "json")
    assert code == 0
    assert json.loads(out)["reports"] == []


def test_presentation_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text("{not json")
    assert run(capsys, "presentation", str(cfg))[0] == 2
    missing = tmp_path / "missing.json"
    assert run(capsys, "presentation", str(missing))[0] == 2
