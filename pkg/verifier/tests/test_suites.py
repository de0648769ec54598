from unittest.mock import patch

from algebra.category import Membership
from frobenius.subcategory import SubcategorySpec
from verifier.context import VerificationContext
from verifier.report import exit_status
from verifier.suites import verify_frobenius_theory, verify_pseudotriangulation, verify_tr_suite

AXIOMS = {"RTR1", "RTR2", "RTR3", "RTR4", "LTR1", "LTR2", "LTR3", "LTR4", "G1", "G2", "AC1", "AC2",
          "EXACT-RIGHT", "EXACT-LEFT", "PSI"}


def test_mod_a2_is_pseudo_triangulated(a2_backend, zero2, k, r):
    reports = verify_pseudotriangulation(a2_backend, [zero2, k, r], label="mod")
    assert {rep.check_id for rep in reports} == AXIOMS
    failing = [(rep.check_id, rep.message) for rep in reports if rep.status != "pass"]
    assert failing == []


def test_tr_suite_on_mod_a2(a2_triple):
    reports = verify_tr_suite(a2_triple, label="T2")
    ids = {rep.check_id for rep in reports}
    assert {"TR1", "TR2", "TR3", "TR4"} <= ids
    assert exit_status(reports) == 0
    cross = next(rep for rep in reports if rep.check_id == "CROSS-D0")
    assert cross.message.startswith("not applicable")


def test_tr_suite_stops_when_the_triple_is_not_frobenius(a2_triple, a2_backend):
    triple = a2_triple.with_d(SubcategorySpec(a2_backend, [], label="zero"), label="T2[0]")
    reports = verify_tr_suite(triple)
    assert len(reports) == 1
    assert reports[0].check_id == "FROBENIUS"
    assert reports[0].status == "fail"


def test_frobenius_theory_on_mod_a2(a2_backend, a2_triple, k, r):
    larger = SubcategorySpec(a2_backend, [k, r], label="Dp", full=True)
    context = VerificationContext(backend=a2_backend, inventory=[k, r], label="mod", triples=[a2_triple],
                                  chains=[(a2_triple, larger)])
    reports = verify_frobenius_theory(context)
    assert len(reports) == 9
    assert [(rep.check_id, rep.message) for rep in reports if rep.status != "pass"] == []
    mutation = next(rep for rep in reports if rep.check_id == "MUTATION-PAIR")
    assert "not applicable" in mutation.message


def test_tr_suite_on_mod_a3(a3_triple):
    reports = verify_tr_suite(a3_triple, label="T3")
    by_id = {rep.check_id: rep for rep in reports}
    for check_id in ("TR2", "TR3"):
        assert by_id[check_id].status == "pass"
        assert by_id[check_id].tested > 0
    assert exit_status(reports) == 0


def test_undecided_membership_makes_the_frobenius_checks_inconclusive(a2_backend, a2_triple, k, r):
    context = VerificationContext(backend=a2_backend, inventory=[k, r], label="mod", triples=[a2_triple])
    with patch.object(a2_triple.z, "contains", return_value=Membership("inconclusive")):
        reports = {rep.check_id: rep for rep in verify_frobenius_theory(context)}
        gate = verify_tr_suite(a2_triple)
    assert reports["FROBENIUS"].status == "inconclusive"
    assert reports["MINIMAL-D"].status == "inconclusive"
    assert [(rep.check_id, rep.status) for rep in gate] == [("FROBENIUS", "inconclusive")]
    assert exit_status(gate) == 2
