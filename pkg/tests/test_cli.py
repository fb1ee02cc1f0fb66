from __future__ import annotations

import json

import pytest

from friezeforge.cli import dump_json, main

A5 = {
    "n": 5,
    "R": [[2, 5], [2, 7]],
    "S": [[1, 7], [2, 4], [5, 7]],
    "epsilon": {"1,7": "u", "2,4": "v", "5,7": "z", "2,5": "1", "2,7": "1"},
}


@pytest.fixture
def cfg_file(tmp_path):
    def write(doc):
        p = tmp_path / "cfg.json"
        p.write_text(json.dumps(doc))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rho_single_arc(capsys, cfg_file):
    path = cfg_file(A5)
    assert run(capsys, "rho", "--config", path, "--arc", "4,6") == (0, "(1+vz)/z\n", "")
    assert run(capsys, "rho", "--config", path, "--arc", "2,5")[1] == "1\n"
    code, out, _ = run(capsys, "rho", "--config", path, "--arc", "3,8", "--method", "both")
    assert code == 0 and "agree" in out


def test_rho_all_json(capsys, cfg_file):
    code, out, _ = run(capsys, "rho", "--config", cfg_file(A5), "--all", "--format", "json", "--method", "both")
    data = json.loads(out)
    assert code == 0 and len(data) == 20
    assert all(e["agree"] for e in data)
    assert data[0]["position"] == [0, 0] and data[0]["direct"]["text"] == "(1+uv+vz)/v"
    assert dump_json(json.loads(out)) == out


def test_rho_all_text_is_in_quiver_order(capsys):
    code, out, _ = run(capsys, "rho", "--config", "@a5", "--all")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 20
    assert lines[0].startswith("(0,0)  {1,3}") and lines[-1].startswith("(7,3)  {3,8}")


def test_pi(capsys, cfg_file):
    path = cfg_file(A5)
    assert run(capsys, "pi", "--config", path, "--arc", "4,6")[1] == "2\n"
    assert run(capsys, "pi", "--config", path, "--arc", "2,7")[1] == "1\n"
    assert run(capsys, "pi", "--config", path, "--arc", "3,8")[1] == "3\n"
    code, out, _ = run(capsys, "pi", "--config", path, "--all", "--format", "json")
    assert len(json.loads(out)) == 20 and dump_json(json.loads(out)) == out


def test_verify_config(capsys, cfg_file):
    code, out, _ = run(capsys, "verify", "--config", cfg_file(A5))
    assert code == 0 and out.rstrip().endswith("PASS")
    code, out, _ = run(capsys, "verify", "--config", "@a5", "--suite", "all", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_enumerate(capsys):
    code, out, _ = run(capsys, "verify", "--enumerate", "4", "--suite", "friezes,multiplication")
    assert code == 0 and "configs: 804" in out


def test_verify_corrupted_epsilon_exits_one(capsys, cfg_file):
    doc = dict(A5, epsilon=dict(A5["epsilon"], **{"2,5": "u"}))
    code, out, _ = run(capsys, "verify", "--config", cfg_file(doc))
    assert code == 1 and "rejected" in out


def test_config_errors_exit_two(capsys, cfg_file):
    doc = dict(A5, R=[[2, 5], [3, 7]])
    code, _, err = run(capsys, "verify", "--config", cfg_file(doc))
    assert code == 2 and "R not a dissection" in err
    for bad in (
        dict(A5, S=[[1, 7], [2, 4]]),
        dict(A5, S=[[1, 7], [2, 4], [2, 5]]),
        dict(A5, n="five"),
        dict(A5, epsilon={"1,7": "u"}),
        dict(A5, epsilon=dict(A5["epsilon"], **{"9,9": "u"})),
        dict(A5, R=[[1, 2]]),
    ):
        assert run(capsys, "rho", "--config", cfg_file(bad), "--arc", "4,6")[0] == 2
    assert run(capsys, "rho", "--config", cfg_file(A5), "--arc", "1,2")[0] == 2
    assert run(capsys, "rho", "--config", cfg_file(A5))[0] == 2
    assert run(capsys, "rho", "--config", "/nonexistent.json", "--all")[0] == 2
    assert run(capsys, "verify", "--config", "@a5", "--suite", "bogus")[0] == 2


def test_epsilon_optional(capsys, cfg_file):
    doc = {k: v for k, v in A5.items() if k != "epsilon"}
    assert run(capsys, "rho", "--config", cfg_file(doc), "--arc", "4,6")[1] == "(1+x2*x3)/x3\n"


def test_frieze_check(capsys, tmp_path):
    code, out, _ = run(capsys, "frieze-check")
    assert code == 0 and out.startswith("pass: 35")
    from friezeforge.patterns import bundled_grid

    bad = tmp_path / "bad.txt"
    bad.write_text(bundled_grid().to_text().replace("3 2 1 4", "3 3 1 4"))
    code, out, _ = run(capsys, "frieze-check", "--file", str(bad))
    assert code == 1 and "diamond at (5,0)" in out
    code, out, _ = run(capsys, "frieze-check", "--config", "@a5")
    assert code == 0 and "generalised" in out
    code, out, _ = run(capsys, "frieze-check", "--file", str(bad), "--format", "json")
    assert {tuple(f["centre"]) for f in json.loads(out)["failures"]} == {(5, 0), (7, 0), (6, 1)}
    junk = tmp_path / "junk.txt"
    junk.write_text("1 2\n1 2\n")
    assert run(capsys, "frieze-check", "--file", str(junk))[0] == 2
