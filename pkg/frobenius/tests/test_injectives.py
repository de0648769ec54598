from unittest.mock import patch

from algebra.category import Membership
from algebra.module import ModuleMorphism
from frobenius.injectives import (conflation_family, extension_obstruction, is_relatively_injective,
                                  relative_injectives)
from frobenius.subcategory import SubcategorySpec
from pseudotri.base import Side


def test_regular_module_is_the_relative_injective(a2_triple):
    found = relative_injectives(a2_triple)
    assert [m.label() for m in found.injectives] == ["R"]
    assert [m.label() for m in found.projectives] == ["R"]
    assert found.conflations > 0
    assert found.describe() == "add(R)"


def test_simple_module_is_not_relatively_injective(a2_triple, a2_backend, k, r):
    triple = a2_triple.with_d(SubcategorySpec(a2_backend, [k, r], label="all"), label="T2[all]")
    found = relative_injectives(triple)
    assert "K is not relatively injective" in found.failures
    assert "K is not relatively projective" in found.failures


def test_identity_of_k_does_not_extend_along_the_socle(a2_triple, a2_backend, k, r):
    ext = a2_backend.make_extension(ModuleMorphism(k, r, [[0], [1]]), Side.FROM_MONIC)
    obstruction = extension_obstruction(a2_triple, k, ext)
    assert obstruction is not None
    assert not obstruction.is_zero()
    assert extension_obstruction(a2_triple, r, ext) is None


def test_family_contains_only_conflations_of_z(a2_triple):
    family = conflation_family(a2_triple)
    assert all(a2_triple.z.contains(ext.b).member for ext in family)
    assert is_relatively_injective(a2_triple, a2_triple.d.inventory[0], family)


def test_undecided_middle_terms_are_left_out_of_the_family(a2_triple):
    with patch.object(a2_triple.z, "contains", return_value=Membership("inconclusive")):
        family = conflation_family(a2_triple)
        found = relative_injectives(a2_triple, family)
    assert len(family) == 0
    assert family.undecided
    assert found.undecided == family.undecided
