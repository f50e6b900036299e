"""End-to-end tests of the command-line interface and its exit codes."""

import json

from seshadri.cli import run

BUILTIN = "builtin:eckl10"


def test_bound_prints_ratio(capsys):
    assert run(["bound", "--dissection", BUILTIN]) == 0
    assert capsys.readouterr().out == "4/13\n"


def test_builtin_round_trip(tmp_path, capsys):
    path = tmp_path / "d.json"
    assert run(["builtin", "--name", "eckl10", "--out", str(path)]) == 0
    assert run(["bound", "--dissection", str(path)]) == 0
    from_file = capsys.readouterr().out
    assert run(["bound", "--dissection", BUILTIN]) == 0
    assert capsys.readouterr().out == from_file


def test_validate_ok(capsys):
    assert run(["validate", "--dissection", BUILTIN]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is True


def test_validate_refutes_tampered_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    run(["builtin", "--name", "eckl10", "--out", str(path)])
    capsys.readouterr()
    data = json.loads(path.read_text())
    data["final"] = data["region"]  # overlap: areas can no longer match
    path.write_text(json.dumps(data))
    assert run(["validate", "--dissection", str(path)]) == 1
    assert json.loads(capsys.readouterr().out)["ok"] is False


def test_verify_exit_codes(capsys):
    assert run(["verify", "--dissection", BUILTIN, "--m", "3/10"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["overall"] is True
    assert len(report["per_polygon"]) == 10
    assert run(["verify", "--dissection", BUILTIN, "--m", "4/13"]) == 1


def test_rational_parsing_is_strict(capsys):
    assert run(["verify", "--dissection", BUILTIN, "--m", "0.31"]) == 2
    assert run(["verify", "--dissection", BUILTIN, "--m", "-1/13"]) == 2


def test_unknown_builtin_and_missing_file(capsys):
    assert run(["bound", "--dissection", "builtin:nope"]) == 2
    assert run(["bound", "--dissection", "/does/not/exist.json"]) == 2


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x"}')
    assert run(["bound", "--dissection", str(path)]) == 2


def test_certify_writes_certificate(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code = run(["certify", "--dissection", BUILTIN, "--n", "13",
                "--oracle", "modular", "--seed", "0", "--out", str(out)])
    assert code == 0
    cert = json.loads(out.read_text())
    assert cert["scale"] == 13 and cert["degree"] == 13
    assert cert["min_ratio"] == "3/13"
    assert len(cert["per_polygon"]) == 10
    assert cert["per_polygon"][0]["oracle"]["non_special"] is True


def test_certify_refuted_at_tiny_scale(capsys):
    assert run(["certify", "--dissection", BUILTIN, "--n", "1"]) == 1
    assert "refuted" in capsys.readouterr().err


def test_certify_determinism(capsys):
    argv = ["certify", "--dissection", BUILTIN, "--n", "13",
            "--oracle", "modular", "--seed", "7"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_oracle_subcommand(tmp_path, capsys):
    system = tmp_path / "sys.json"
    system.write_text(json.dumps({
        "D": [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]],
        "multiplicities": [3],
        "seed": 0,
    }))
    assert run(["oracle", "--system", str(system), "--mode", "exact"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["non_special"] is True and verdict["actual_dimension"] == -1
    assert run(["oracle", "--system", str(system), "--mode", "modular"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["method"] == "modular"

    special = tmp_path / "special.json"
    special.write_text(json.dumps({
        "D": [[0, 0], [1, 0], [2, 0]],
        "multiplicities": [2],
        "seed": 0,
    }))
    assert run(["oracle", "--system", str(special), "--mode", "exact"]) == 1


def test_oracle_explicit_points(tmp_path, capsys):
    system = tmp_path / "sys.json"
    system.write_text(json.dumps({
        "D": [[0, 0], [1, 0], [0, 1]],
        "multiplicities": [1, 1, 1],
        "points": [["0", "0"], ["1", "0"], ["0", "1"]],
    }))
    assert run(["oracle", "--system", str(system), "--mode", "exact"]) == 0
    assert json.loads(capsys.readouterr().out)["actual_dimension"] == -1


def test_oracle_guardrail_exit_code(tmp_path, monkeypatch):
    monkeypatch.setenv("SESHADRI_MAX_CELLS", "2")
    system = tmp_path / "sys.json"
    system.write_text(json.dumps({
        "D": [[0, 0], [1, 0], [0, 1]],
        "multiplicities": [1],
        "seed": 0,
    }))
    assert run(["oracle", "--system", str(system), "--mode", "exact"]) == 3


def test_render_svg_structure(tmp_path):
    out = tmp_path / "d.svg"
    assert run(["render", "--dissection", BUILTIN, "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.count("<path") == 10
    assert svg.count("<line") == 9
    assert svg.count("<text") == 19
    assert 'stroke-dasharray' in svg


def test_render_no_labels(tmp_path):
    out = tmp_path / "d.svg"
    assert run(["render", "--dissection", BUILTIN, "--out", str(out),
                "--no-labels"]) == 0
    assert out.read_text().count("<text") == 0


def test_render_canvas_guardrail(tmp_path):
    out = tmp_path / "d.svg"
    assert run(["render", "--dissection", BUILTIN, "--out", str(out),
                "--size", "50"]) == 2


def test_render_determinism(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(["render", "--dissection", BUILTIN, "--out", str(a)])
    run(["render", "--dissection", BUILTIN, "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_bad_usage_is_exit_two(capsys):
    assert run(["verify", "--dissection", BUILTIN]) == 2   # missing --m
    assert run(["frobnicate"]) == 2
