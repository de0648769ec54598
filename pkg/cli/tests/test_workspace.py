import json
from pathlib import Path

import pytest

from cli.workspace import load_workspace, parse_workspace, resolve_workspace
from errors import WorkspaceError
from pseudotri.abelian import AbelianBackend
from pseudotri.stable import StableBackend

WORKSPACES = Path(__file__).parents[2] / "workspaces"


def _document(**overrides):
    doc = {
        "name": "tiny",
        "field": {"characteristic": 2},
        "algebras": [{"name": "A2", "preset": "truncated_polynomial", "n": 2}],
        "modules": [{"name": "K", "algebra": "A2", "preset": "jordan", "k": 1},
                    {"name": "R", "algebra": "A2", "preset": "regular"}],
        "backends": [{"name": "mod", "kind": "abelian", "algebra": "A2"}],
    }
    doc.update(overrides)
    return json.dumps(doc)


def test_invalid_json_reports_position():
    with pytest.raises(WorkspaceError) as info:
        parse_workspace('{"name": "x",\n  "field": }')
    assert info.value.details["line"] == 2
    assert info.value.details["column"] > 1


def test_unknown_preset_is_rejected():
    text = _document(algebras=[{"name": "A2", "preset": "laurent", "n": 2}])
    with pytest.raises(WorkspaceError) as info:
        parse_workspace(text)
    assert "laurent" in info.value.message
    assert info.value.entity.startswith("algebras")


def test_non_prime_characteristic_is_rejected():
    with pytest.raises(WorkspaceError) as info:
        parse_workspace(_document(field={"characteristic": 4}))
    assert info.value.entity.startswith("field")


def test_undeclared_module_names_the_entity():
    text = _document(backends=[{"name": "st", "kind": "stable", "algebra": "A2", "inventory": ["K", "M9"]}])
    with pytest.raises(WorkspaceError) as info:
        resolve_workspace(parse_workspace(text))
    assert info.value.entity == "M9"


def test_undeclared_algebra_names_the_entity():
    text = _document(modules=[{"name": "K", "algebra": "B", "preset": "jordan", "k": 1}])
    with pytest.raises(WorkspaceError) as info:
        resolve_workspace(parse_workspace(text))
    assert info.value.entity == "B"


def test_bad_action_matrices_are_rejected():
    # x acting by the identity is not nilpotent, so x.x = 0 fails
    text = _document(modules=[{"name": "B", "algebra": "A2", "action": [[[1]], [[1]]]}])
    with pytest.raises(WorkspaceError) as info:
        resolve_workspace(parse_workspace(text))
    assert info.value.entity == "B"


def test_stable_backend_on_non_self_injective_algebra_is_a_workspace_error():
    path = {"name": "P", "structure_constants": [[[1, 0, 0], [0, 0, 0], [0, 0, 0]],
                                                 [[0, 0, 0], [0, 1, 0], [0, 0, 1]],
                                                 [[0, 0, 1], [0, 0, 0], [0, 0, 0]]],
            "unit": [1, 1, 0]}
    text = _document(algebras=[path], modules=[],
                     backends=[{"name": "st", "kind": "stable", "algebra": "P", "inventory": []}])
    with pytest.raises(WorkspaceError):
        resolve_workspace(parse_workspace(text))


def test_default_inventory_is_every_module_over_the_algebra():
    ws = resolve_workspace(parse_workspace(_document()))
    assert isinstance(ws.backend(), AbelianBackend)
    assert [m.label() for m in ws.inventories["mod"]] == ["K", "R"]
    assert ws.seed == 0


def test_seed_argument_overrides_the_file():
    ws = resolve_workspace(parse_workspace(_document(seed=5)), seed=11)
    assert ws.seed == 11


def test_load_bundled_workspaces():
    a2 = load_workspace(WORKSPACES / "a2.json")
    assert sorted(a2.modules) == ["0", "K", "R"]
    assert sorted(a2.subcategories) == ["D", "Dp", "Z", "zero"]
    assert a2.triple().label == "T"
    assert len(a2.chains) == 1

    a3 = load_workspace(WORKSPACES / "a3.json")
    assert isinstance(a3.backend("stmod"), StableBackend)
    assert sorted(a3.triples) == ["T", "T0"]


def test_missing_file(tmp_path):
    with pytest.raises(WorkspaceError) as info:
        load_workspace(tmp_path / "nope.json")
    assert "does not exist" in info.value.message


def test_lookup_of_undeclared_triple():
    ws = load_workspace(WORKSPACES / "a2.json")
    with pytest.raises(WorkspaceError) as info:
        ws.triple("T9")
    assert info.value.entity == "T9"
