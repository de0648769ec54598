import pytest

from algebra.category import is_self_injective, isomorphic
from algebra.constructions import (as_columns, direct_sum, dual_module, dual_regular_module, factor_through_cokernel,
                                   free_module, generated_subspace, kci, map_from_regular, quotient_module, submodule)
from algebra.module import Module, ModuleMorphism, validate_module
from errors import ContractError


def test_cokernel_of_socle_inclusion_is_k(k, r):
    data = kci(ModuleMorphism(k, r, [[0], [1]]))
    assert data.kernel.dim == 0
    assert data.image.dim == 1
    assert data.cokernel.dim == 1
    assert isomorphic(data.cokernel, k).found
    assert (data.cokernel_projection @ ModuleMorphism(k, r, [[0], [1]])).is_zero()


def test_kernel_of_projection_is_k(k, r):
    data = kci(ModuleMorphism(r, k, [[1, 0]]))
    assert data.kernel.dim == 1
    assert isomorphic(data.kernel, k).found
    assert data.cokernel.dim == 0


def test_factor_through_cokernel(k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    data = kci(socle)
    projection = ModuleMorphism(r, k, [[1, 0]])
    induced = factor_through_cokernel(data, projection)
    assert (induced @ data.cokernel_projection).same_as(projection)


def test_submodule_must_be_invariant(r):
    with pytest.raises(ContractError):
        submodule(r, [[1], [0]])
    socle, inclusion = submodule(r, [[0], [1]])
    assert socle.dim == 1
    assert validate_module(socle).ok


def test_quotient_by_socle(k, r):
    quotient, projection, section = quotient_module(r, [[0], [1]])
    assert quotient.dim == 1
    assert isomorphic(quotient, k).found
    assert section.shape == (2, 1)


def test_free_module_and_generators(a2, k):
    free = free_module(a2, 2)
    assert free.module.dim == 4
    f = map_from_regular(k, [1])
    assert f.matrix.tolist() == [[1, 0]]


def test_self_injectivity(a2, a3, r, m2):
    assert isomorphic(dual_regular_module(a2), r).found
    assert is_self_injective(a2)
    assert is_self_injective(a3)
    assert dual_module(m2).dim == 2
    assert isomorphic(dual_module(m2), m2).found


def test_path_algebra_is_not_self_injective(path_algebra):
    assert not is_self_injective(path_algebra)


def test_as_columns_handles_empty_input(f2):
    assert as_columns([], 0, f2).shape == (0, 0)
    assert as_columns([], 3, f2).shape == (3, 0)
    assert as_columns([1, 0], 2, f2).shape == (2, 1)
    with pytest.raises(ContractError):
        as_columns([1, 0, 1], 2, f2)


def test_constructions_on_the_zero_module(zero2):
    sub, inclusion = submodule(zero2, [])
    assert sub.dim == 0
    assert inclusion.matrix.shape == (0, 0)
    quotient, projection, section = quotient_module(zero2, [])
    assert quotient.dim == 0
    assert section.shape == (0, 0)
    assert generated_subspace(zero2, []).shape == (0, 0)


def test_kci_of_maps_touching_zero(zero2, r):
    into = kci(ModuleMorphism.zero(zero2, r))
    assert into.kernel.dim == 0
    assert into.image.dim == 0
    assert into.cokernel.dim == 2
    out = kci(ModuleMorphism.zero(r, zero2))
    assert out.kernel.dim == 2
    assert out.cokernel.dim == 0


def test_quotient_by_everything_is_zero(r):
    quotient, projection, section = quotient_module(r, [[1, 0], [0, 1]])
    assert quotient.dim == 0
    assert projection.matrix.shape == (0, 2)


def test_direct_sum_inject_and_project(k, r):
    pair = direct_sum([k, r])
    socle = ModuleMorphism(k, r, [[0], [1]])
    into = pair.inject(1, socle)
    assert into.target is pair.module
    assert pair.project(1, into).same_as(socle)
    assert pair.project(0, into).is_zero()


def test_empty_direct_sum_is_zero(a2):
    empty = direct_sum([], algebra=a2)
    assert empty.module.dim == 0
    assert isinstance(empty.module, Module)
