"""Command-line behavior, exercised through real subprocess runs."""

import json
import shutil
import subprocess
import sys

import pytest

import ginvlab

CMD = [sys.executable, "-m", "ginvlab"]


def run_cli(*argv):
    return subprocess.run(CMD + list(argv), capture_output=True, text=True)


@pytest.fixture(scope="module")
def z6_spec(tmp_path_factory):
    path = tmp_path_factory.mktemp("specs") / "z6.json"
    path.write_text(json.dumps({"kind": "zmod", "n": 6}))
    return str(path)


@pytest.fixture(scope="module")
def m2gf3_spec(tmp_path_factory):
    path = tmp_path_factory.mktemp("specs") / "m2gf3.json"
    path.write_text(json.dumps({"kind": "matrix", "k": 2, "q": 3}))
    return str(path)


@pytest.fixture(scope="module")
def big_spec(tmp_path_factory):
    path = tmp_path_factory.mktemp("specs") / "z16384.json"
    path.write_text(json.dumps({"kind": "zmod", "n": 16384}))
    return str(path)


def test_ring_info_text(z6_spec):
    res = run_cli("ring", "info", z6_spec)
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "ring: kind=zmod size=6 semiprime=true"
    assert lines[1] == "characteristic: 6"
    assert lines[2] == "regular: 6 of 6"


def test_ring_info_json_example10():
    res = run_cli("ring", "info", "example10", "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["tool"] == "ginvlab"
    assert doc["version"] == ginvlab.__version__
    ring = doc["ring"]
    assert ring["kind"] == "table" and ring["size"] == 1024
    assert ring["semiprime"] is False
    assert ring["semiprime_witness"] == "xa + xb"
    assert ring["characteristic"] == 2
    assert ring["regular_count"] == 645
    assert doc["checks"] == []


def test_inv_pinned_values(z6_spec):
    res = run_cli("inv", z6_spec, "--elem", "3", "--kind", "inner",
                  "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    (entry,) = doc["checks"]
    assert entry["name"] == "inv_inner" and entry["status"] == "pass"
    assert entry["note"] == "3 members"
    members = {w["value"] for w in entry["witnesses"]}
    assert members == {"1", "3", "5"}


def test_inv_reflexive_text(z6_spec):
    res = run_cli("inv", z6_spec, "--elem", "3", "--kind", "reflexive")
    assert res.returncode == 0
    assert "reflexive inverses of 3: 1 members" in res.stdout
    assert "\n  3" in res.stdout


def test_inv_display_cap_and_all(m2gf3_spec):
    # I(0) is the whole 81-element ring, past the 64-member display cap
    res = run_cli("inv", m2gf3_spec, "--elem", "0", "--format", "json")
    assert res.returncode == 0
    (entry,) = json.loads(res.stdout)["checks"]
    assert entry["note"] == "81 members, showing first 64"
    assert len(entry["witnesses"]) == 64
    text = run_cli("inv", m2gf3_spec, "--elem", "0")
    assert "... (17 more; use --all)" in text.stdout
    res = run_cli("inv", m2gf3_spec, "--elem", "0", "--all", "--format", "json")
    (entry,) = json.loads(res.stdout)["checks"]
    assert len(entry["witnesses"]) == 81


def test_inv_ideals(z6_spec):
    res = run_cli("inv", z6_spec, "--elem", "2", "--kind", "ideals",
                  "--format", "json")
    assert res.returncode == 0
    checks = json.loads(res.stdout)["checks"]
    byname = {c["name"]: {w["value"] for w in c["witnesses"]} for c in checks}
    assert byname["inv_right_ideal"] == {"0", "2", "4"}
    assert byname["inv_left_ideal"] == {"0", "2", "4"}


def test_inv_budget_exceeded_is_skipped(big_spec):
    res = run_cli("inv", big_spec, "--elem", "5", "--budget", "100",
                  "--format", "json")
    assert res.returncode == 0
    (entry,) = json.loads(res.stdout)["checks"]
    assert entry["status"] == "skipped"
    assert entry["witnesses"] == []


def test_check_exit_codes(z6_spec):
    assert run_cli("check", z6_spec, "--checks", "nielsen").returncode == 0
    assert run_cli("check", z6_spec, "--checks", "nielsen",
                   "--expect-violation").returncode == 1
    assert run_cli("check", "example10", "--checks",
                   "theorem_inner").returncode == 1
    assert run_cli("check", "example10", "--checks", "theorem_inner",
                   "--expect-violation").returncode == 0


def test_check_json_schema(z6_spec):
    res = run_cli("check", z6_spec, "--checks", "all", "--format", "json",
                  "--no-timing")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert set(doc) == {"tool", "version", "ring", "checks", "summary"}
    assert len(doc["checks"]) == len(ginvlab.CHECK_NAMES)
    for entry in doc["checks"]:
        assert set(entry) == {"name", "status", "witnesses", "note",
                              "elapsed_ms"}
        assert entry["elapsed_ms"] == 0.0
        for w in entry["witnesses"]:
            assert set(w) == {"name", "value"}
    assert doc["summary"] == {"pass": 10, "violation": 0, "skipped": 1}


def test_check_text_summary(z6_spec):
    res = run_cli("check", z6_spec, "--no-timing")
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1] == "summary: pass=10 violation=0 skipped=1"


def test_check_violation_witnesses_rendered():
    res = run_cli("check", "example10", "--checks", "theorem_inner",
                  "--format", "json")
    (entry,) = json.loads(res.stdout)["checks"]
    assert entry["status"] == "violation"
    values = {w["name"]: w["value"] for w in entry["witnesses"]}
    assert values == {"a": "bxa", "b": "axb"}


def test_no_timing_is_reproducible(z6_spec):
    argv = ("check", z6_spec, "--checks", "inner_param,nielsen",
            "--format", "json", "--no-timing")
    first = run_cli(*argv)
    second = run_cli(*argv)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_matrix_ginverse():
    res = run_cli("matrix", "--k", "2", "--q", "2", "ginverse", "1,0;0,0")
    assert res.returncode == 0
    assert "ginverse: 1,0;0,0" in res.stdout


def test_matrix_seteq():
    same = run_cli("matrix", "--k", "2", "--q", "2", "seteq",
                   "1,0;0,0", "1,0;0,0")
    assert "inner inverse sets equal: yes" in same.stdout
    diff = run_cli("matrix", "--k", "2", "--q", "2", "seteq",
                   "1,0;0,0", "0,0;0,1")
    assert "inner inverse sets equal: no" in diff.stdout
    assert same.returncode == diff.returncode == 0


def test_matrix_membership():
    res = run_cli("matrix", "--k", "2", "--q", "2", "membership",
                  "0,0;0,1", "1,0;0,0")
    assert res.returncode == 0
    assert "b in aR: no" in res.stdout
    assert "b in Ra: no" in res.stdout
    res = run_cli("matrix", "--k", "2", "--q", "3", "membership",
                  "2,0;0,0", "1,0;0,0", "--format", "json")
    (entry,) = json.loads(res.stdout)["checks"]
    assert entry["note"] == "b in aR: true; b in Ra: true"


def test_matrix_wrong_arity():
    res = run_cli("matrix", "--k", "2", "--q", "2", "seteq", "1,0;0,0")
    assert res.returncode == 2
    assert "2 matrix argument(s)" in res.stderr


def test_matrix_malformed_input():
    res = run_cli("matrix", "--k", "2", "--q", "2", "ginverse", "1,x;0,0")
    assert res.returncode == 2
    assert res.stderr.startswith("error:")


def test_table_spec_file(tmp_path):
    spec = {"kind": "table", "p": 2, "basis": ["1", "t"], "unity": [1, 0],
            "constants": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]}
    path = tmp_path / "dual.json"
    path.write_text(json.dumps(spec))
    res = run_cli("ring", "info", str(path), "--format", "json")
    assert res.returncode == 0
    ring = json.loads(res.stdout)["ring"]
    assert ring["size"] == 4
    assert ring["semiprime"] is False
    assert ring["semiprime_witness"] == "t"


def test_error_exits(z6_spec, tmp_path):
    cases = [
        ("check", z6_spec, "--checks", "bogus"),
        ("check", str(tmp_path / "missing.json")),
        ("inv", z6_spec, "--elem", "q"),
        ("ring",),
        (),
    ]
    for argv in cases:
        res = run_cli(*argv)
        assert res.returncode == 2, argv
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "weird"}))
    res = run_cli("ring", "info", str(bad))
    assert res.returncode == 2
    assert "error:" in res.stderr


@pytest.mark.skipif(shutil.which("ginvlab") is None,
                    reason="console script not on PATH")
def test_console_script(z6_spec):
    res = subprocess.run(["ginvlab", "check", z6_spec, "--checks", "nielsen"],
                         capture_output=True, text=True)
    assert res.returncode == 0
