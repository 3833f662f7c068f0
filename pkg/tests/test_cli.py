import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from drinfeld_filtration.cli import build_report, main, render_text


def run(*args):
    return subprocess.run([sys.executable, "-m", "drinfeld_filtration", *args], capture_output=True, text=True)


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("drinfeld_filtration").joinpath("schema/report-v1.json").read_text())


def test_report_structure_sheaf_json(schema):
    r = run("report", "--d", "2", "--lambda", "0,0,0", "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema)
    assert doc["floor_dim"] == 1
    assert [s["algebraic_part"] for s in doc["subquotients"]] == [None, None]
    assert [len(s["analytic_part"]["psi"]) for s in doc["subquotients"]] == [2, 1]


def test_report_canonical_bundle(schema):
    r = run("report", "--d", "2", "--lambda", "-2,1,1", "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema)
    alg = doc["subquotients"][1]["algebraic_part"]
    assert doc["subquotients"][1]["j"] == 2
    assert alg == {"tag": "v^G_P(1,1,1)", "kind": "infinite", "parabolic": [1, 1, 1], "coefficient_dim": 1}
    assert doc["subquotients"][0]["algebraic_part"] is None


def test_report_rejects_non_dominant():
    r = run("report", "--d", "2", "--lambda", "1,0,2")
    assert r.returncode == 2 and "dominant" in r.stderr and r.stdout == ""


@pytest.mark.parametrize("args", [
    ["report", "--d", "2", "--lambda", "1,x,0"],
    ["report", "--d", "2", "--lambda", "0,0"],
    ["report", "--d", "2"],
    ["report", "--d", "2", "--lambda", "0,0,0", "--n", "2"],
    ["verify", "--suite", "nope"],
    [],
])
def test_usage_errors(args):
    assert main(args) == 2


def test_determinism_and_text_matches_json():
    a = run("report", "--d", "3", "--lambda", "-1,1,0,0", "--format", "json", "--p", "2")
    b = run("report", "--d", "3", "--lambda", "-1,1,0,0", "--format", "json", "--p", "2")
    assert a.returncode == 0 and a.stdout == b.stdout
    doc = json.loads(a.stdout)
    text = run("report", "--d", "3", "--lambda", "-1,1,0,0", "--p", "2").stdout
    assert text == render_text(doc)
    for s in doc["subquotients"]:
        for w in s["analytic_part"]["psi"]:
            assert "(" + ",".join(map(str, w)) + ")" in text
        for deg, m in s["analytic_part"]["kernel"]["by_degree"]:
            assert f"{deg}:{m}" in text


def test_no_floats_anywhere():
    def walk(x):
        if isinstance(x, float):
            raise AssertionError(x)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)
    for d, lam in [(2, (0, 0, 0)), (3, (-3, 1, 1, 1)), (2, (0, 1, 0))]:
        walk(build_report(d, lam, 2, 2, 2))


def test_finite_level_section(schema):
    doc = build_report(2, (0, 0, 0), 1, 2, 2)
    jsonschema.validate(doc, schema)
    assert doc["finite_level"]["poset_sizes"] == {"T": 98, "T_free": 56}
    assert doc["finite_level"]["steinberg_dims"][-1] == {"j": 2, "dimension": 8}


def test_verify_building_smoke():
    r = run("verify", "--suite", "building", "--size", "smoke")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "PASS building: free-flag counterexample" in r.stdout


def test_verify_pieri_desk_json():
    r = run("verify", "--suite", "pieri", "--size", "desk", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["passed"] and all(c["passed"] for c in doc["checks"])
    per_check = [c["comparisons"] for c in doc["checks"]]
    assert all(500 <= c <= 5000 for c in per_check)


def test_verify_all_smoke_budget():
    import time
    t = time.perf_counter()
    r = run("verify", "--suite", "all", "--size", "smoke")
    assert r.returncode == 0, r.stdout + r.stderr
    assert time.perf_counter() - t < 60
    assert r.stdout.splitlines()[-1].startswith("PASS")


def test_verify_failure_exit_code(monkeypatch, capsys):
    from drinfeld_filtration import suites

    def broken(size):
        return [suites.CheckResult("weights", "rigged", False, 1, "counterexample: (0, 0)")]
    monkeypatch.setitem(suites.SUITES, "weights", broken)
    assert main(["verify", "--suite", "weights"]) == 1
    out = capsys.readouterr()
    assert "FAIL weights: rigged" in out.out and "(0, 0)" in out.err
