import uuid

import pytest

from session import VerificationSession
from verifier.report import CheckReport


def test_session_collects_reports():
    with VerificationSession("demo") as session:
        session.extend([CheckReport(check_id="A", status="pass")])
        session.extend([CheckReport(check_id="B", status="fail")])
    assert [r.check_id for r in session.reports] == ["A", "B"]
    uuid.UUID(session.session_id)


def test_explicit_session_id():
    assert VerificationSession(session_id="fixed").session_id == "fixed"


def test_exceptions_propagate():
    with pytest.raises(RuntimeError):
        with VerificationSession("demo"):
            raise RuntimeError("boom")
