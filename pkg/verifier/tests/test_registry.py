from types import SimpleNamespace

import pytest

from config import Budget
from errors import InconclusiveError
from verifier.base import Check
from verifier.decorator import check
from verifier.registry import CheckRegistry
from verifier.report import CheckReport
from verifier.suites import frobenius_theory


@check(check_id="DEMO-PASS", family="demo")
def demo_pass(context) -> CheckReport:
    """Always holds."""
    return CheckReport(check_id="DEMO-PASS", family="demo", status="pass", tested=1)


@check(check_id="DEMO-BROKEN", family="demo")
def demo_broken(context) -> CheckReport:
    raise ValueError("broken on purpose")


@check(check_id="DEMO-SLOW", family="demo")
def demo_slow(context) -> CheckReport:
    raise InconclusiveError("ran out of candidates")


@check()
def unnamed(context):
    return None


def _context():
    return SimpleNamespace(label="demo", budget=Budget())


def test_decorator_builds_a_check():
    assert isinstance(demo_pass, Check)
    assert demo_pass.description == "Always holds."
    assert demo_pass.arguments == [("context", "_empty")]
    assert unnamed.check_id == "UNNAMED"
    assert unnamed.family == "test_registry"
    assert unnamed.description == "No description provided."


def test_duplicate_registration_is_rejected():
    registry = CheckRegistry()
    registry.register(demo_pass)
    with pytest.raises(ValueError):
        registry.register(demo_pass)


def test_session_id_is_injected():
    registry = CheckRegistry(session_id="abc")
    registry.register(demo_pass)
    assert registry.get("DEMO-PASS").session_id == "abc"
    assert "Check: DEMO-PASS" in registry.to_string()


def test_run_turns_exceptions_into_reports():
    registry = CheckRegistry()
    for c in (demo_pass, demo_broken, demo_slow):
        registry.register(c)
    reports = {r.check_id: r for r in registry.run(_context())}
    assert reports["DEMO-PASS"].status == "pass"
    broken = reports["DEMO-BROKEN"]
    assert broken.status == "fail"
    assert broken.witness["validator"] == "exception"
    assert broken.witness["exception"]["type"] == "ValueError"
    slow = reports["DEMO-SLOW"]
    assert slow.status == "inconclusive"
    assert slow.budget == Budget().accounting()


def test_run_only_selected_checks():
    registry = CheckRegistry()
    registry.register(demo_pass)
    registry.register(demo_broken)
    assert [r.check_id for r in registry.run(_context(), only=["DEMO-PASS"])] == ["DEMO-PASS"]


def test_register_from_module():
    registry = CheckRegistry()
    registry.register_from_module(frobenius_theory)
    assert registry.get("FROBENIUS") is not None
    assert registry.get("MUTATION-PAIR") is not None
    assert len(registry.list_checks()) == 9
