import pytest

from algebra.module import ModuleMorphism
from errors import ContractError
from verifier.replay import replay
from verifier.report import CheckReport, witness_payload


def test_only_fail_reports_replay(a2_backend):
    with pytest.raises(ContractError):
        replay(CheckReport(check_id="RTR1", status="pass"), a2_backend)


def test_a_valid_triangle_does_not_reproduce(a2_backend, k, r):
    t = a2_backend.complete_right(ModuleMorphism(k, r, [[0], [1]]))
    report = CheckReport(check_id="RTR1", status="fail", witness=witness_payload("in_right", f=t.f, g=t.g, h=t.h))
    assert not replay(report, a2_backend)


def test_a_broken_triangle_reproduces(a2_backend, k, r):
    zero = ModuleMorphism.zero(k, r)
    projection = ModuleMorphism(r, k, [[1, 0]])
    h = ModuleMorphism.zero(k, a2_backend.sigma(k))
    report = CheckReport(check_id="RTR1", status="fail",
                         witness=witness_payload("in_right", f=zero, g=projection, h=h))
    assert replay(report, a2_backend)


def test_stable_validators_need_the_stable_category(a2_backend, k):
    report = CheckReport(check_id="TR1", status="fail",
                         witness=witness_payload("distinguished", f=ModuleMorphism.identity(k)))
    with pytest.raises(ContractError):
        replay(report, a2_backend)


def test_unknown_validator(a2_backend):
    report = CheckReport(check_id="X", status="fail", witness={"validator": "exception"})
    with pytest.raises(ContractError):
        replay(report, a2_backend)
