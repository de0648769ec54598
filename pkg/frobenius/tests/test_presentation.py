from unittest.mock import patch

import pytest

from algebra.category import Membership, isomorphic
from errors import InconclusiveError, NotEnoughInjectivesError, NotEnoughProjectivesError
from frobenius.presentation import injective_presentation, projective_presentation


def test_injective_presentation_of_k(a2_triple, k, r):
    pres = injective_presentation(a2_triple, k, [r])
    assert isomorphic(pres.injective, r).found
    assert isomorphic(pres.shift, k).found
    assert pres.shift.name == "S(K)"
    assert (pres.beta @ pres.alpha).is_zero()


def test_projective_presentation_of_k(a2_triple, k, r):
    pres = projective_presentation(a2_triple, k, [r])
    assert isomorphic(pres.projective, r).found
    assert isomorphic(pres.coshift, k).found
    assert pres.coshift.name == "S*(K)"


def test_presentations_over_a3(a3_triple, m1, m2, r3):
    pres = injective_presentation(a3_triple, m2, [r3])
    assert isomorphic(pres.injective, r3).found
    assert isomorphic(pres.shift, m1).found
    assert pres.summands == [r3]
    assert isomorphic(projective_presentation(a3_triple, m1, [r3]).coshift, m2).found


def test_without_injectives_there_is_no_presentation(a2_triple, k):
    with pytest.raises(NotEnoughInjectivesError):
        injective_presentation(a2_triple, k, [])
    with pytest.raises(NotEnoughProjectivesError):
        projective_presentation(a2_triple, k, [])


def test_zero_object_has_the_empty_presentation(a2_triple, zero2):
    pres = injective_presentation(a2_triple, zero2, [])
    assert pres.injective.dim == 0
    assert pres.shift.dim == 0


def test_undecided_cokernel_makes_the_presentation_inconclusive(a2_triple, k, r):
    with patch.object(a2_triple.z, "contains", return_value=Membership("inconclusive")):
        with pytest.raises(InconclusiveError) as info:
            injective_presentation(a2_triple, k, [r])
        with pytest.raises(InconclusiveError):
            projective_presentation(a2_triple, k, [r])
    assert "undecided" in info.value.message
    assert "max_instances" in info.value.budget
