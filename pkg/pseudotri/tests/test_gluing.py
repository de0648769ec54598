from algebra.module import ModuleMorphism
from pseudotri.base import Side
from pseudotri.gluing import (ac1_failure, ac2_failure, check_gluing, exactness_failure, g1_failure, g2_failure,
                              left_exactness_failure)


def test_gluing_holds_in_mod_a2(a2_backend, zero2, k, r):
    result = check_gluing(a2_backend, [zero2, k, r])
    assert set(result) == {"G1", "G2", "AC1", "AC2"}
    for name, sweep in result.items():
        assert sweep.status == "pass", (name, [f.message for f in sweep.findings])
        assert sweep.tested > 0


def test_single_instances_in_mod_a2(a2_backend, k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    projection = ModuleMorphism(r, k, [[1, 0]])
    assert g1_failure(a2_backend, projection) is None
    assert g2_failure(a2_backend, socle) is None
    ext = a2_backend.make_extension(socle, Side.FROM_MONIC)
    assert ac1_failure(a2_backend, ext, ext) is None
    assert ac2_failure(a2_backend, ext, ext) is None


def test_hom_functors_are_exact_on_triangles(a2_backend, k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    for e in (k, r):
        assert exactness_failure(a2_backend, a2_backend.complete_right(socle), e) is None
        assert left_exactness_failure(a2_backend, a2_backend.complete_left(ModuleMorphism(r, k, [[1, 0]])), e) is None


def test_gluing_holds_in_stmod_a3(a3_stmod, m1, m2):
    result = check_gluing(a3_stmod, [m1, m2])
    assert all(sweep.status == "pass" for sweep in result.values())
