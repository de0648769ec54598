import numpy as np
import pytest

from algebra.constructions import direct_sum
from algebra.hom import hom_space
from algebra.module import Module, ModuleMorphism, validate_module, validate_morphism
from algebra.presets import jordan_module
from errors import ContractError


def test_presets_validate(k, r, m2, r3):
    for m in (k, r, m2, r3):
        assert validate_module(m).ok


def test_action_not_respecting_the_product(a2):
    # x acting as the identity on a line, although x^2 = 0
    bad = Module(a2, np.array([[[1]], [[1]]]), name="bad")
    result = validate_module(bad)
    assert not result.ok
    assert result.indices == [1, 1]


def test_jordan_block_bounds(a2):
    with pytest.raises(ContractError):
        jordan_module(a2, 3)


def test_socle_inclusion_is_a_morphism(k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    assert validate_morphism(socle).ok
    assert not validate_morphism(ModuleMorphism(k, r, [[1], [0]])).ok


def test_shape_and_composition_are_checked(k, r):
    with pytest.raises(ContractError):
        ModuleMorphism(k, r, [[1, 0]])
    f = ModuleMorphism(k, r, [[0], [1]])
    with pytest.raises(ContractError):
        f @ f
    with pytest.raises(ContractError):
        f + ModuleMorphism.identity(r)


def test_morphism_arithmetic(r):
    x = ModuleMorphism(r, r, [[0, 0], [1, 0]])
    assert (x @ x).is_zero()
    assert (x + x).is_zero()
    assert (-x).same_as(x)
    assert x.scale(3).same_as(x)


def test_zero_module_keys_agree(a2):
    assert Module.zero(a2).key == Module.zero(a2, name="other").key
    assert Module.zero(a2).dim == 0


def test_hom_dimensions_over_a2(k, r):
    assert hom_space(k, r).dim == 1
    assert hom_space(r, k).dim == 1
    assert hom_space(k, k).dim == 1
    assert hom_space(r, r).dim == 2


def test_hom_dimensions_over_a3(m1, m2, r3):
    assert hom_space(m2, m2).dim == 2
    assert hom_space(m1, r3).dim == 1
    assert hom_space(r3, r3).dim == 3
    for f in hom_space(m2, r3).morphisms():
        assert validate_morphism(f).ok


def test_hom_across_algebras_is_refused(k, m1):
    with pytest.raises(ContractError):
        hom_space(k, m1)


def test_direct_sum_is_block_diagonal(k, r):
    total = direct_sum([k, r])
    assert total.module.dim == 3
    assert total.module.action[1].tolist() == [[0, 0, 0], [0, 0, 0], [0, 1, 0]]
    for inj, proj in zip(total.injections, total.projections):
        assert (proj @ inj).same_as(ModuleMorphism.identity(inj.source))
