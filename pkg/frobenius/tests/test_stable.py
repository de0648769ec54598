import numpy as np
import pytest

from algebra.constructions import direct_sum
from algebra.module import ModuleMorphism
from errors import ContractError
from frobenius.octahedron import octahedron_stable, prepare_octahedron, stable_octahedron_identities
from frobenius.triangle import StableTriangle


def _socle(m1, m2):
    return ModuleMorphism(m1, m2, [[0], [1]])


def test_stable_homs_over_a2(a2_stable, k, r):
    assert a2_stable.hom_dim(k, k) == 1
    assert a2_stable.is_zero_object(r)
    assert a2_stable.find_iso(a2_stable.shift_object(k), k).found
    assert a2_stable.find_iso(a2_stable.coshift_object(k), k).found


def test_shift_swaps_the_blocks_over_a3(a3_stable, m1, m2):
    assert a3_stable.hom_dim(m2, m2) == 1
    assert a3_stable.find_iso(a3_stable.shift_object(m1), m2).found
    assert a3_stable.find_iso(a3_stable.shift_object(m2), m1).found
    assert a3_stable.factors_through_injectives(ModuleMorphism(m1, a3_stable.injectives[0], [[0], [0], [1]]))


def test_cone_of_socle_inclusion(a2_stable, k, r):
    t = a2_stable.cone(ModuleMorphism(k, r, [[0], [1]]))
    assert a2_stable.find_iso(t.z, k).found
    assert a2_stable.is_distinguished(t).ok
    assert "f_X" in t.witness.to_payload()


def test_cone_of_zero_map_is_a_sum(a2_stable, k):
    t = a2_stable.cone(ModuleMorphism.zero(k, k))
    assert a2_stable.find_iso(t.z, direct_sum([k, k]).module).found
    assert a2_stable.is_distinguished(t).ok


def test_identity_with_zero_maps_is_not_distinguished(a2_stable, k):
    shifted = a2_stable.shift_object(k)
    t = StableTriangle(ModuleMorphism.identity(k), ModuleMorphism.zero(k, k), ModuleMorphism.zero(k, shifted))
    assert not a2_stable.is_distinguished(t).ok


def test_third_map_must_land_in_the_shift(a2_stable, k, r):
    t = StableTriangle(ModuleMorphism.identity(k), ModuleMorphism.zero(k, k), ModuleMorphism.zero(k, r))
    assert a2_stable.is_distinguished(t).reason == "third map does not land in S X"


def test_rotation_stays_distinguished(a3_stable, m1, m2):
    t = a3_stable.cone(_socle(m1, m2))
    assert a3_stable.is_distinguished(t).ok
    assert a3_stable.is_distinguished(a3_stable.rotate(t)).ok


def test_rotation_carries_an_isomorphism_to_a_standard_triangle(a3_stable, m1, m2):
    f = _socle(m1, m2)
    rotated = a3_stable.rotate(a3_stable.cone(f))
    assert rotated.reference is not None
    assert a3_stable.is_iso(rotated.reference.c)
    assert a3_stable.equal(rotated.witness.morphisms["v"], -a3_stable.shift_map(f))


def test_rotation_with_the_wrong_sign_is_not_distinguished(a3_stable, m1, m2):
    rotated = a3_stable.rotate(a3_stable.cone(_socle(m1, m2)))
    unsigned = StableTriangle(rotated.f, rotated.g, -rotated.h, reference=rotated.reference)
    result = a3_stable.is_distinguished(unsigned)
    assert not result.ok
    assert result.reason == "S(a) h != q' c"


def test_three_rotations_stay_distinguished(a3_stable, m1, m2):
    t = a3_stable.cone(_socle(m1, m2))
    for _ in range(3):
        t = a3_stable.rotate(t)
        assert a3_stable.is_distinguished(t).ok
        assert a3_stable.is_distinguished(StableTriangle(t.f, t.g, t.h)).ok
    assert t.x.key == a3_stable.shift_object(m1).key


def test_fill_in_between_cones_with_scalar_vertical_maps(a3_stable, m1, m2):
    f = _socle(m1, m2)
    t, t2 = a3_stable.cone(f), a3_stable.cone(f.scale(2))
    x, y = a3_stable.identity(m1), a3_stable.identity(m2).scale(2)
    z, witness = a3_stable.fill_in(t, t2, x, y)
    assert a3_stable.equal(z @ t.g, t2.g @ y)
    assert a3_stable.equal(t2.h @ z, a3_stable.shift_map(x) @ t.h)
    assert "z_standard" in witness.morphisms
    assert a3_stable.is_iso(z)


def test_fill_in_between_cones_for_every_commuting_square(a3_stable, m1, m2):
    f = _socle(m1, m2)
    t = a3_stable.cone(f)
    squares = a3_stable.commuting_squares(f, f)
    assert squares
    for x, y in squares:
        z, _ = a3_stable.fill_in(t, t, x, y)
        assert a3_stable.equal(z @ t.g, t.g @ y)
        assert a3_stable.equal(t.h @ z, a3_stable.shift_map(x) @ t.h)


def test_fill_in_on_standard_triangles(a3_stable, m1, m2):
    ext = a3_stable.cone(_socle(m1, m2)).reference.standard.extension
    t = a3_stable.standard_triangle(ext)
    x, y = a3_stable.identity(t.x), a3_stable.identity(t.y)
    z, witness = a3_stable.fill_in(t, t, x, y)
    assert a3_stable.equal(z @ t.g, t.g)
    assert a3_stable.equal(t.h @ z, a3_stable.shift_map(x) @ t.h)
    assert "z" in witness.morphisms


def test_fill_in_rejects_a_square_that_does_not_commute(a3_stable, m1, m2):
    ext = a3_stable.cone(_socle(m1, m2)).reference.standard.extension
    t = a3_stable.standard_triangle(ext)
    with pytest.raises(ContractError):
        a3_stable.fill_in(t, t, a3_stable.identity(t.x), ModuleMorphism.zero(t.y, t.y))


def test_shift_map_does_not_depend_on_the_lift(a3_stable, m1, m2):
    f = _socle(m1, m2)
    canonical = a3_stable.shift_map(f)
    for seed in range(3):
        assert a3_stable.equal(canonical, a3_stable.shift_map(f, rng=np.random.default_rng(seed)))
    assert a3_stable.equal(a3_stable.shift_map(a3_stable.identity(m1)), a3_stable.identity(a3_stable.shift_object(m1)))


def test_unit_and_counit_are_isomorphisms(a3_stable, m1, m2):
    for x in (m1, m2):
        assert a3_stable.is_iso(a3_stable.unit(x))
        assert a3_stable.is_iso(a3_stable.counit(x))


@pytest.mark.parametrize("perturb", [False, True])
def test_octahedron(a3_stable, m1, m2, perturb):
    l0 = _socle(m1, m2)
    m0 = ModuleMorphism(m2, m1, [[1, 0]])
    t_f, t_l, t_lp = prepare_octahedron(a3_stable, l0, m0, perturb=perturb)
    found = octahedron_stable(a3_stable, t_f, t_l, t_lp)
    assert stable_octahedron_identities(a3_stable, t_f, t_l, t_lp, found.g_prime, found.q_prime) is None
    assert a3_stable.is_distinguished(found.triangle).ok
    assert found.path in ("constructive", "search")
