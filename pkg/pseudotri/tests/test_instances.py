from pseudotri.instances import Sweep, composable_pairs, extensions, morphisms, omega_monics


def test_sweep_status():
    sweep = Sweep("X")
    assert sweep.status == "pass"
    sweep.inconclusive = "budget"
    assert sweep.status == "inconclusive"
    sweep.fail("broken", "g1")
    assert sweep.status == "fail"
    assert sweep.findings[0].validator == "g1"


def test_morphisms_respect_the_cap(a2_backend, k, r):
    found = list(morphisms(a2_backend.category, [k, r], limit=5))
    assert len(found) == 5
    assert len(list(composable_pairs(a2_backend.category, [k, r], limit=7))) == 7


def test_omega_monics_are_injective(a2_backend, k, r):
    for f in omega_monics(a2_backend, [k, r]):
        assert a2_backend.epic_monic_test(f)[1]


def test_extensions_come_from_injective_maps(a2_backend, k, r):
    found = extensions(a2_backend, [k, r])
    assert found
    for ext in found:
        assert a2_backend.in_right(ext.right()).ok
