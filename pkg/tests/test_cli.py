import json

import pytest
from click.testing import CliRunner

from octowaring.cli import main
from octowaring.field import GF
from octowaring.octonion import Octonion, norm

F7 = GF(7)


def run(*args, input=None, env=None):
    return CliRunner().invoke(main, list(args), input=input, env=env)


def oct_json(*s):
    return {"eta": s[0], "x": list(s[1:4]), "y": list(s[4:7]), "zeta": s[7]}


A = oct_json(1, 2, 3, 4, 5, 6, 0, 1)
B = oct_json(3, 0, 1, 0, 2, 2, 5, 4)
E1 = oct_json(0, 1, 0, 0, 0, 0, 0, 0)


def test_eval_unit_product():
    res = run("eval", json.dumps({"op": "mul", "args": ["unit", A]}))
    assert res.exit_code == 0
    assert Octonion.from_json(json.loads(res.output)) == Octonion.from_json(A, F7)


def test_eval_norm_of_product():
    prod = run("eval", json.dumps({"op": "norm", "args": [{"op": "mul", "args": [A, B]}]}))
    want = norm(Octonion.from_json(A, F7)) * norm(Octonion.from_json(B, F7))
    assert json.loads(prod.output) == want.to_json()


def test_eval_pow_zero():
    res = run("eval", json.dumps({"op": "pow", "n": 0, "args": [A]}))
    assert Octonion.from_json(json.loads(res.output)) == Octonion.unit(F7)


def test_eval_other_field_and_stdin():
    res = run("eval", "-", "--field", "3^2", input=json.dumps({"op": "conj", "args": [A]}))
    assert res.exit_code == 0
    assert json.loads(res.output)["eta"]["p"] == 3


def test_eval_env_override():
    res = run("eval", json.dumps({"op": "trace", "args": [A]}), env={"OCTO_FIELD": "5"})
    assert res.exit_code == 0
    assert json.loads(res.output) == {"p": 5, "m": 1, "c": [2]}


def test_eval_parse_error_has_position():
    res = run("eval", '{"op": "mul",\n "args": [}')
    assert res.exit_code == 1
    assert "line 2" in res.output and "column" in res.output


@pytest.mark.parametrize("expr", [
    {"op": "frobnicate", "args": []},
    {"op": "mul", "args": ["unit"]},
    {"op": "pow", "args": ["unit"]},
    {"op": "inverse", "args": ["zero"]},
])
def test_eval_bad_trees(expr):
    assert run("eval", json.dumps(expr)).exit_code == 1


def test_bad_field():
    assert run("eval", '"unit"', "--field", "6").exit_code == 1
    assert run("eval", '"unit"', "--field", "7^30").exit_code == 1


def test_solve_exit_codes(tmp_path):
    inst = {"A1": oct_json(1, 0, 0, 0, 0, 0, 0, 1), "A2": oct_json(1, 0, 0, 0, 0, 0, 0, 1),
            "k1": 2, "k2": 2, "target": oct_json(5, 0, 0, 0, 0, 0, 0, 0)}
    res = run("solve", json.dumps(inst))
    assert res.exit_code == 0
    assert json.loads(res.output)["verified"] is True
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    assert run("solve", f"@{path}").exit_code == 0

    bad = {"A1": E1, "A2": E1, "k1": 2, "k2": 2, "target": oct_json(0, 0, 0, 0, 0, 0, 0, 1)}
    res = run("solve", json.dumps(bad))
    assert res.exit_code == 2
    out = json.loads(res.output)
    assert out["family"] == 5 and out["mask"][7] == "zero"

    assert run("solve", json.dumps(dict(inst, k1=1))).exit_code == 1
    assert run("solve", json.dumps({"k1": 2})).exit_code == 1


def test_solve_rep_and_table():
    inst = {"rep": {"family": "K1E", "params": {"alpha1": 2, "beta1": 3}}, "k1": 3, "k2": 2,
            "target": oct_json(1, 2, 3, 4, 5, 6, 0, 1)}
    res = run("solve", json.dumps(inst), "--format", "table")
    assert res.exit_code == 0
    assert "verified: True" in res.output


def test_classify():
    res = run("classify", json.dumps({"A1": oct_json(0, 0, 0, 0, 0, 0, 0, 2), "A2": oct_json(0, 0, 0, 0, 0, 0, 0, 3)}))
    assert res.exit_code == 0
    assert json.loads(res.output)["family"] == 2
    res = run("classify", json.dumps({"family": "FK", "params": {"alpha1": 1, "alpha8": 2, "beta1": 3, "beta8": 4}}))
    assert json.loads(res.output)["surjective"] is True
    res = run("classify", json.dumps({"A1": A, "A2": B}))
    assert res.exit_code == 1


def test_census_family():
    res = run("census", "--family", "1", "--q", "2", "--k1", "2", "--k2", "2")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["proper_subset"] is True and out["instances"] == 1


def test_census_all_families_table():
    res = run("census", "--all-families", "--q", "2", "--format", "table")
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert len(lines) == 1 + 8


def test_census_pair_and_limits():
    res = run("census", "--pair", json.dumps({"A1": E1, "A2": E1}), "--q", "2")
    assert json.loads(res.output)["image_size"] == 16
    assert run("census", "--family", "1", "--q", "5").exit_code == 1
    assert run("census", "--family", "1", "--q", "3", "--cap", "100").exit_code == 1
    assert run("census", "--q", "2").exit_code == 1
    assert run("census", "--family", "99").exit_code == 1


def test_json_output_round_trips():
    res = run("eval", json.dumps({"op": "mul", "args": [A, B]}))
    first = json.loads(res.output)
    again = run("eval", json.dumps(first))
    assert json.loads(again.output) == first
