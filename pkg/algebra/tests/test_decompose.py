import numpy as np

from algebra.category import isomorphic
from algebra.constructions import direct_sum
from algebra.decompose import decompose, fitting_split
from algebra.module import Module, ModuleMorphism, validate_morphism
from linalg.elimination import rank


def _classes(decomposition, candidates):
    return sorted(next(c.name for c in candidates if isomorphic(s.module, c).found)
                  for s in decomposition.summands)


def test_k_plus_r_splits_into_k_and_r(k, r):
    total = direct_sum([k, r]).module
    result = decompose(total, seed=3)
    assert result.complete
    assert sorted(s.module.dim for s in result.summands) == [1, 2]
    assert _classes(result, [k, r]) == ["K", "R"]


def test_r_plus_r_gives_two_copies_of_r(r):
    result = decompose(direct_sum([r, r]).module)
    assert _classes(result, [r]) == ["R", "R"]


def test_summand_maps_reassemble_the_module(k, r):
    total = direct_sum([k, r, k]).module
    result = decompose(total)
    assert len(result.summands) == 3
    for s in result.summands:
        assert validate_morphism(s.injection).ok
        assert (s.projection @ s.injection).same_as(ModuleMorphism.identity(s.module))
    iso = result.reconstruction()
    assert iso.source.dim == total.dim
    assert rank(iso.matrix, total.field) == total.dim


def test_indecomposables_stay_whole(r, m2):
    assert len(decompose(r).summands) == 1
    assert len(decompose(m2).summands) == 1


def test_zero_module_has_no_summands(a2):
    result = decompose(Module.zero(a2))
    assert result.summands == []
    assert result.complete


def test_fitting_split(f2):
    split = fitting_split(np.array([[0, 0], [0, 1]]), f2)
    assert split is not None
    assert split[0].shape[1] + split[1].shape[1] == 2
    assert fitting_split(np.array([[0, 1], [0, 0]]), f2) is None
