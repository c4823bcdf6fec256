"""CLI behaviour, exit codes and golden outputs.

Golden files live in tests/golden/.  Regenerate them after an intended
output change with ``HOPFKIT_REGEN_GOLDEN=1 python3 -m pytest tests/test_cli.py``
and review the diff.
"""
import json
import os
from pathlib import Path

import pytest
from click.testing import CliRunner

from conftest import built
from hopfkit.cli import main
from hopfkit.comatrix import anti_map, conjugation_map
from hopfkit.exact_linalg.cyclotomic import CycNumber
from hopfkit.exact_linalg.matrix import ExactMatrix
from hopfkit.serialize import dumps, validate

GOLDEN = Path(__file__).parent / "golden"


def golden(name: str, text: str) -> None:
    path = GOLDEN / name
    if os.environ.get("HOPFKIT_REGEN_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
    assert path.exists(), f"missing golden file {name}; set HOPFKIT_REGEN_GOLDEN=1"
    assert text == path.read_text(encoding="utf-8")


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env or {"HOPFKIT_WORKERS": "1"})


@pytest.fixture
def taft_file(tmp_path, taft3):
    p = tmp_path / "taft.json"
    p.write_text(dumps(taft3), encoding="utf-8")
    return str(p)


# ---------------------------------------------------------------- construct

def test_construct_taft_golden():
    res = run("construct", "taft", "--N", "3")
    assert res.exit_code == 0
    golden("taft3.json", res.stdout)


def test_construct_to_file(tmp_path):
    out = tmp_path / "uq.json"
    res = run("--out", str(out), "construct", "uq_sl2", "--q", "z3")
    assert res.exit_code == 0 and res.stdout == ""
    assert out.read_bytes().endswith(b"}\n") and b"\r\n" not in out.read_bytes()


def test_construct_equals_form():
    assert run("construct", "group_algebra", "--group=C3").exit_code == 0


@pytest.mark.parametrize("args", [
    ["construct", "taft", "--N", "3", "--q", "1"],
    ["construct", "nothing"],
    ["construct", "taft", "N", "3"],
    ["construct", "taft", "--N"],
    ["construct", "taft", "--N", "3", "--json"],
    ["--field-order", "4", "construct", "taft", "--N", "3"],
])
def test_construct_bad_parameters(args):
    res = run(*args)
    assert res.exit_code == 2
    assert res.stderr.startswith("error:") or "Error" in res.stderr


def test_construct_field_order():
    res = run("--field-order", "6", "construct", "taft", "--N", "3")
    assert res.exit_code == 0
    assert json.loads(res.stdout)["field"] == {"cyclotomic_order": 6}


# ---------------------------------------------------------------- verify

def test_verify_ok(taft_file):
    res = run("verify", taft_file)
    assert res.exit_code == 0 and "all axioms hold" in res.stdout


def test_verify_json(taft_file):
    res = run("--json", "verify", taft_file)
    doc = json.loads(res.stdout)
    validate(doc)
    assert doc["kind"] == "verify" and doc["ok"] is True
    assert [a["name"] for a in doc["axioms"]] == ["coassociativity", "counit", "associativity", "unit",
                                                  "bialgebra", "antipode"]


def test_verify_reports_each_failing_axiom(tmp_path, taft3):
    doc = json.loads(dumps(taft3))
    doc["antipode"][1][1] = "1"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    res = run("--json", "verify", str(p))
    assert res.exit_code == 1
    status = {a["name"]: a["ok"] for a in json.loads(res.stdout)["axioms"]}
    assert status == {"coassociativity": True, "counit": True, "associativity": True, "unit": True,
                      "bialgebra": True, "antipode": False}


def test_missing_file_is_io_error(tmp_path):
    res = run("verify", str(tmp_path / "nope.json"))
    assert res.exit_code == 3 and "cannot read" in res.stderr


def test_truncated_file_is_parse_error(tmp_path, taft3):
    p = tmp_path / "cut.json"
    p.write_text(dumps(taft3)[:100], encoding="utf-8")
    res = run("verify", str(p))
    assert res.exit_code == 4


def test_unwritable_output_is_io_error(tmp_path, taft_file):
    res = run("--out", str(tmp_path / "no" / "such" / "dir.txt"), "verify", taft_file)
    assert res.exit_code == 3


# ---------------------------------------------------------------- analyze

def test_analyze_uq_golden(tmp_path):
    p = tmp_path / "uq.json"
    p.write_text(dumps(built("uq_sl2")), encoding="utf-8")
    res = run("analyze", str(p), "--filtration", "--invariants")
    assert res.exit_code == 0
    golden("uq_sl2_analyze.txt", res.stdout.replace(str(p), "uq.json"))


def test_analyze_json_sections(taft_file):
    res = run("--json", "analyze", taft_file)
    assert res.exit_code == 0
    doc = json.loads(res.stdout)
    validate(doc)
    assert set(doc["sections"]) == {"filtration", "isotypic", "invariants", "dual"}
    assert doc["sections"]["filtration"]["layer_dims"] == [0, 3, 6]
    assert doc["sections"]["invariants"]["type"] == [3, 3]


def test_analyze_not_split_suggests_order(tmp_path):
    p = tmp_path / "heis.json"
    p.write_text(dumps(built("group_dual", group="Heisenberg27", m=1)), encoding="utf-8")
    res = run("analyze", str(p), "--filtration")
    assert res.exit_code == 5 and "--field-order 3" in res.stderr
    assert run("--field-order", "3", "analyze", str(p), "--filtration").exit_code == 0


# ---------------------------------------------------------------- census

def test_census_27_golden():
    res = run("census", "--dim", "27", "--grouplikes", "1")
    assert res.exit_code == 0 and "all eliminated" in res.stdout
    golden("census27_g1.txt", res.stdout)


def test_census_27_json_golden():
    res = run("--json", "census", "--dim", "27", "--grouplikes", "1")
    doc = json.loads(res.stdout)
    validate(doc)
    assert doc["all_eliminated"] is True
    golden("census27_g1.json", res.stdout)


def test_census_scenario():
    res = run("census", "--scenario", "dim27")
    assert res.exit_code == 0
    assert res.stdout.rstrip().endswith("all eliminated; conclusion: semisimple, pointed or copointed")


def test_census_survivors_still_exit_zero():
    res = run("census", "--dim", "27", "--grouplikes", "1", "--without-rule", "27_final")
    assert res.exit_code == 0 and "1 candidate(s) survive" in res.stdout


def test_census_same_output_for_any_worker_count():
    a = run("--json", "census", "--dim", "64", env={"HOPFKIT_WORKERS": "1"}).stdout
    b = run("--json", "census", "--dim", "64", env={"HOPFKIT_WORKERS": "3"}).stdout
    assert a == b


@pytest.mark.parametrize("args, env", [
    (["census"], None),
    (["census", "--dim", "27", "--grouplikes", "two"], None),
    (["census", "--dim", "27", "--grouplikes", "2"], None),
    (["census", "--scenario", "nope"], None),
    (["census", "--dim", "27"], {"HOPFKIT_WORKERS": "zero"}),
])
def test_census_bad_parameters(args, env):
    assert run(*args, env=env).exit_code == 2


def test_list_scenarios():
    res = run("census", "--list-scenarios")
    assert res.exit_code == 0 and "dim27" in res.stdout and "both-taft" in res.stdout


# ---------------------------------------------------------------- normal-form

def _matrix_file(tmp_path, M, name="f.json"):
    p = tmp_path / name
    p.write_text(dumps(M), encoding="utf-8")
    return str(p)


def test_normal_form_auto(tmp_path):
    U = ExactMatrix.from_rows([[1, 0], [0, CycNumber.zeta(3)]], 3)
    res = run("--json", "normal-form", "--matrix", _matrix_file(tmp_path, conjugation_map(U)))
    assert res.exit_code == 0
    doc = json.loads(res.stdout)
    validate(doc)
    assert doc["map_kind"] == "automorphism" and doc["order"] == 3


def test_normal_form_anti_stefan(tmp_path):
    A = ExactMatrix.from_rows([[0, CycNumber.zeta(3)], [1, 0]], 3)
    res = run("--json", "normal-form", "--matrix", _matrix_file(tmp_path, anti_map(A)))
    doc = json.loads(res.stdout)
    assert doc["map_kind"] == "anti-automorphism" and "stefan_omega" in doc["data"]
    assert doc["data"]["conditions"] == {"a": True, "b": True, "c": True}


def test_normal_form_transpose_is_degenerate(tmp_path):
    res = run("normal-form", "--matrix", _matrix_file(tmp_path, anti_map(ExactMatrix.identity(2))))
    assert res.exit_code == 0 and "symmetric" in res.stdout


def test_normal_form_wrong_kind_is_not_a_map(tmp_path):
    A = ExactMatrix.from_rows([[0, CycNumber.zeta(3)], [1, 0]], 3)
    res = run("normal-form", "--matrix", _matrix_file(tmp_path, anti_map(A)), "--kind", "auto")
    assert res.exit_code == 6


def test_normal_form_bad_shape(tmp_path):
    res = run("normal-form", "--matrix", _matrix_file(tmp_path, ExactMatrix.identity(3)))
    assert res.exit_code == 2


def test_normal_form_needs_larger_field(tmp_path):
    # U = [[0, -1], [1, 1]] has eigenvalues the primitive 6th roots of unity, which are not rational
    f = _matrix_file(tmp_path, conjugation_map(ExactMatrix.from_rows([[0, -1], [1, 1]])))
    res = run("normal-form", "--matrix", f)
    assert res.exit_code == 5 and "--field-order" in res.stderr
    assert run("--field-order", "3", "normal-form", "--matrix", f).exit_code == 0


def test_version():
    res = run("--version")
    assert res.exit_code == 0 and "hopfkit" in res.stdout
