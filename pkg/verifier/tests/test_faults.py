from verifier.faults import FAULTS, FlippedPsiBackend, UnsignedRotationBackend
from verifier.replay import replay
from verifier.report import exit_status
from verifier.suites import verify_pseudotriangulation


def _by_id(reports):
    return {rep.check_id: rep for rep in reports}


def test_flipped_psi_is_caught_and_replayed(a3, m1, m2):
    backend = FlippedPsiBackend(a3, [m1, m2])
    reports = _by_id(verify_pseudotriangulation(backend, [m1, m2], label="flipped"))
    psi = reports["PSI"]
    assert psi.status == "fail"
    assert "psi^-1 psi(e) != e" in psi.message
    assert psi.witness["validator"] == "psi"
    assert replay(psi, backend)
    assert exit_status(reports.values()) == 1


def test_unsigned_rotation_is_caught_and_replayed(a3, m1, m2):
    backend = UnsignedRotationBackend(a3, [m1, m2])
    reports = _by_id(verify_pseudotriangulation(backend, [m1, m2], label="unsigned"))
    rtr2 = reports["RTR2"]
    assert rtr2.status == "fail"
    assert rtr2.witness["validator"] == "in_right"
    assert replay(rtr2, backend)


def test_the_sound_backend_passes_psi(a3_stmod, m1, m2):
    reports = _by_id(verify_pseudotriangulation(a3_stmod, [m1, m2], label="stmod"))
    assert reports["PSI"].status == "pass"
    assert reports["RTR2"].status == "pass"


def test_fault_names():
    assert sorted(FAULTS) == ["flipped-psi", "unsigned-rotation"]
