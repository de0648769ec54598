import pytest

from algebra.module import ModuleMorphism
from errors import ContractError
from pseudotri.octahedron import octahedron_identities, octahedron_right


def test_octahedron_in_mod_a2(a2_backend, k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    t_l = a2_backend.complete_right(socle)
    t_lp = a2_backend.complete_right(ModuleMorphism.identity(r))
    t_f = a2_backend.complete_right(t_lp.g @ socle)
    found = octahedron_right(a2_backend, t_f, t_l, t_lp)
    assert a2_backend.in_right(found.triangle).ok
    assert found.triangle.f.same_as(t_l.g)
    assert octahedron_identities(a2_backend, t_f, t_l, t_lp, found.g_prime, found.h_prime) is None


def test_octahedron_needs_a_factorisation(a2_backend, k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    t_l = a2_backend.complete_right(socle)
    t_lp = a2_backend.complete_right(socle)
    # m' l = 0 but f is an isomorphism K -> coker
    t_f = a2_backend.complete_right(ModuleMorphism(k, t_lp.c, [[1]]))
    with pytest.raises(ContractError):
        octahedron_right(a2_backend, t_f, t_l, t_lp)
