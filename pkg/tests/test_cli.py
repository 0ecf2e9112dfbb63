from __future__ import annotations

import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from superqf.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_list():
    code, text = run("list")
    assert code == EXIT_OK
    assert text.rstrip().endswith("48 entries")
    code, text = run("list", "--table", "3", "--format", "json")
    doc = json.loads(text)
    assert doc["count"] == 4 and {e["table"] for e in doc["entries"]} == {3}


def test_show_text_and_json():
    code, text = run("show", "D6")
    assert code == EXIT_OK
    assert "[e2,e3] = -e4" in text and "form 0 [1]: e3*^e1* + e4*^e2*" in text
    code, text = run("show", "D10_q", "--format", "json")
    doc = json.loads(text)
    assert doc["id"] == "D10_q" and doc["region"]["constraints"] == [{"poly": "q+1", "rel": "!="}]


def test_verify_json_is_deterministic_and_valid():
    args = ("verify", "--entry", "D6", "--entry", "D10_0^1", "--format", "json")
    code1, a = run(*args)
    code2, b = run(*args[:1], "--jobs", "2", *args[1:])
    assert code1 == code2 == EXIT_OK
    assert a == b
    schema = json.loads(resources.files("superqf").joinpath("data/report.schema.json").read_text())
    jsonschema.validate(json.loads(a), schema)


def test_text_and_json_verdicts_agree():
    args = ("verify", "--entry", "D9_pq", "--entry", "D5", "--check", "qf-classify", "--check", "jacobi")
    code_t, text = run(*args)
    code_j, js = run(*args, "--format", "json")
    assert code_t == code_j == EXIT_FAIL
    doc = json.loads(js)
    for e in doc["entries"]:
        line = next(l for l in text.splitlines() if l.startswith(e["id"] + " "))
        for name, res in e["checks"].items():
            assert f"{name}={res['status']}" in line


def test_extend():
    code, text = run("extend", "D5")
    assert code == EXIT_OK
    assert "[e4,Pi(e4*)] = Pi(e1*)" in text and "form factor 1" in text
    code, text = run("extend", "D10_0^2", "--format", "json")
    doc = json.loads(text)
    assert code == EXIT_FAIL and not doc["ok"]
    kinds = {a["kind"]: a["isomorphism"]["ok"] for a in doc["extensions"]}
    assert kinds == {"pi-t-star": True, "t-star": False}


def test_qf():
    code, text = run("qf", "D10_q")
    assert code == EXIT_OK and text.count(" ok") == 3
    code, text = run("qf", "D2_q", "--format", "json")
    doc = json.loads(text)
    assert code == EXIT_FAIL
    assert [p["point"]["q"] for p in doc["points"] if not p["match"]] == ["1"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["show"],
        ["show", "D99"],
        ["extend", "D1"],
        ["verify", "--check", "nope"],
        ["verify", "--samples", "0"],
        ["verify", "--entry", "D99"],
        ["qf", "D10_q", "--samples", "0"],
        ["--catalog", "/nonexistent/catalog.json", "list"],
    ],
)
def test_usage_and_data_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == EXIT_USAGE
    assert capsys.readouterr().err


def test_bad_catalog_file_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"schema_version": "7", "parameters": [], "entries": []}')
    code, _ = run("--catalog", str(p), "list")
    assert code == EXIT_USAGE
    assert "schema version" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superqf", "show", "D99"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
    assert "unknown catalog entry 'D99'" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "superqf", "list", "--table", "6"], capture_output=True, text=True)
    assert proc.returncode == EXIT_OK and "2 entries" in proc.stdout
