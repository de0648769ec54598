import json
from pathlib import Path
from unittest.mock import patch

import pytest

from cli.app import main
from config import SEED_ENV_VAR
from errors import InconclusiveError, InternalConsistencyError

WORKSPACES = Path(__file__).parents[2] / "workspaces"
A2 = str(WORKSPACES / "a2.json")
A3 = str(WORKSPACES / "a3.json")


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def unseeded(tmp_path):
    doc = json.loads(Path(A2).read_text())
    doc.pop("seed")
    path = tmp_path / "unseeded.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_validate(capsys):
    code, out = _run(capsys, [A2, "validate"])
    body = json.loads(out)
    assert code == 0
    assert body["modules"] == ["0", "K", "R"]
    assert body["triples"] == ["T"]
    assert body["chains"] == ["T: D <= Dp"]


def test_shift_of_simple_is_simple(capsys):
    code, out = _run(capsys, [A2, "shift", "--object", "K"])
    body = json.loads(out)
    assert code == 0
    assert body["result"]["iso_class"] == "K"
    assert body["command"] == "shift"


def test_shift_of_projective_is_zero(capsys):
    code, out = _run(capsys, [A2, "shift", "--object", "R", "--direction", "S*"])
    assert code == 0
    assert json.loads(out)["result"]["iso_class"] == "0"


def test_ext1_and_hom(capsys):
    code, out = _run(capsys, [A2, "ext1", "--source", "K", "--target", "K"])
    body = json.loads(out)
    assert code == 0
    assert body["dim"] == 1
    assert body["basis_middle_dims"] == [2]

    code, out = _run(capsys, [A2, "hom", "--source", "K", "--target", "R"])
    assert json.loads(out)["hom_dim"] == 1


def test_unknown_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main([A2, "triangulate"])
    assert info.value.code == 3


def test_non_prime_field_exits_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "bad", "field": {"characteristic": 4}}))
    assert main([str(path), "validate"]) == 3
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == "workspace_error"


def test_missing_workspace_exits_3(tmp_path):
    assert main([str(tmp_path / "none.json"), "validate"]) == 3


def test_invalid_budget_exits_3():
    assert main([A2, "--budget", "max_instances=0", "validate"]) == 3


def test_unknown_budget_key_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main([A2, "--budget", "patience=3", "validate"])
    assert info.value.code == 3


def test_undeclared_object_exits_3(capsys):
    assert main([A2, "shift", "--object", "M9"]) == 3
    assert "M9" in capsys.readouterr().err


def test_text_format(capsys):
    code, out = _run(capsys, [A2, "--format", "text", "shift", "--object", "K"])
    assert code == 0
    assert out.splitlines()[0] == "shift on a2 (seed 0): exit 0"


def test_seed_from_environment(capsys, monkeypatch, unseeded):
    monkeypatch.setenv(SEED_ENV_VAR, "7")
    _, out = _run(capsys, [unseeded, "validate"])
    assert json.loads(out)["seed"] == 7


def test_seed_flag_wins(capsys, monkeypatch, unseeded):
    monkeypatch.setenv(SEED_ENV_VAR, "7")
    _, out = _run(capsys, [unseeded, "--seed", "3", "validate"])
    assert json.loads(out)["seed"] == 3
    _, out = _run(capsys, [A2, "validate"])
    assert json.loads(out)["seed"] == 0


def test_mutation_check_with_zero_d(capsys):
    code, out = _run(capsys, [A3, "--triple", "T0", "mutation-check"])
    body = json.loads(out)
    assert code == 0
    assert body["hom_conditions_vacuous"] is True


def test_verify_tr_writes_report(tmp_path, capsys):
    out = tmp_path / "tr.json"
    code = main([A2, "--out", str(out), "verify-tr"])
    assert code == 0
    assert capsys.readouterr().out == ""
    body = json.loads(out.read_text())
    statuses = {r["check_id"]: r["status"] for r in body["reports"]}
    assert all(statuses[c] == "pass" for c in ("TR1", "TR2", "TR3", "TR4"))
    assert body["exit_status"] == 0


def test_repeated_runs_are_byte_identical(tmp_path):
    first, second = tmp_path / "1.json", tmp_path / "2.json"
    assert main([A2, "--seed", "5", "--out", str(first), "verify-tr"]) == 0
    assert main([A2, "--seed", "5", "--out", str(second), "verify-tr"]) == 0
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.parametrize("error, code", [
    (InternalConsistencyError("p f != alpha_X", identity="p f = alpha_X"), 1),
    (InconclusiveError("no isomorphism found", budget={"random_trials": 256}), 2),
])
def test_escaping_errors_map_to_exit_codes(capsys, error, code):
    def broken(ws, args):
        raise error

    with patch.dict("cli.app.COMMANDS", {"validate": broken}):
        assert main([A2, "validate"]) == code
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == error.code


def test_fill_in_between_cones(capsys):
    code, out = _run(capsys, [A3, "fill-in", "--first", "M1->M2[1]", "--second", "M1->M2[1]",
                              "-x", "id:M1", "-y", "id:M2"])
    body = json.loads(out)
    assert code == 0
    assert "z_standard" in body["witness"]
    assert body["z"].startswith("C(M1->M2)->")


def test_rotate_is_distinguished(capsys):
    code, out = _run(capsys, [A3, "rotate", "--morphism", "M1->M2[1]"])
    body = json.loads(out)
    assert code == 0
    assert body["distinguished"] is True
    assert body["reason"] == "pass"
