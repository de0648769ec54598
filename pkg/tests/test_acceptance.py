"""End-to-end runs of the bundled workspaces through the command line."""
import json
from pathlib import Path

import pytest

from cli.app import main

WORKSPACES = Path(__file__).parents[1] / "workspaces"


@pytest.fixture
def run(capsys):
    def invoke(workspace, *argv):
        code = main([str(WORKSPACES / workspace), *argv])
        return code, json.loads(capsys.readouterr().out)
    return invoke


def test_every_bundled_workspace_validates(run):
    for name in ("a2.json", "a3.json", "a4_stable.json"):
        code, body = run(name, "validate")
        assert code == 0
        assert body["workspace"] == name.removesuffix(".json")


def test_projectives_form_the_smallest_frobenius_d(run):
    code, body = run("a3.json", "frobenius-check")
    assert code == 0
    assert body["frobenius"] is True
    assert body["minimal_d"] == ["R"]
    assert body["summands_in_d"] is True


def test_stable_module_category_is_triangulated(run):
    code, body = run("a3.json", "verify-tr")
    assert code == 0
    assert {r["status"] for r in body["reports"]} == {"pass"}


def test_shift_swaps_the_jordan_blocks(run):
    code, body = run("a3.json", "shift", "--object", "M1")
    assert code == 0
    assert body["result"]["iso_class"] == "M2"


def test_shift_in_a_stable_backend(run):
    code, body = run("a4_stable.json", "--backend", "stmod", "shift", "--object", "J1")
    assert code == 0
    assert body["result"]["iso_class"] == "J3"


def test_injected_fault_is_reported(run):
    code, body = run("a3.json", "--backend", "stmod", "verify-axioms", "--fault", "flipped-psi")
    statuses = {r["check_id"]: r["status"] for r in body["reports"]}
    assert code == 1
    assert statuses["PSI"] == "fail"
