import pytest

from algebra.category import isomorphic
from algebra.module import ModuleMorphism
from errors import NotOmegaMonicError, NotSigmaEpicError
from pseudotri.base import Side
from pseudotri.triangles import RightTriangle


def test_complete_right_of_socle_is_a_right_triangle(a2_backend, k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    t = a2_backend.complete_right(socle)
    assert isomorphic(t.c, k).found
    assert t.h.target.dim == 0
    assert a2_backend.in_right(t).ok


def test_complete_left_of_projection(a2_backend, k, r):
    t = a2_backend.complete_left(ModuleMorphism(r, k, [[1, 0]]))
    assert isomorphic(t.a, k).found
    assert a2_backend.in_left(t).ok


def test_in_right_names_the_failure(a2_backend, k, r):
    zero = ModuleMorphism.zero(k, r)
    projection = ModuleMorphism(r, k, [[1, 0]])
    h = ModuleMorphism.zero(k, a2_backend.sigma(k))
    result = a2_backend.in_right(RightTriangle(zero, projection, h))
    assert not result.ok
    assert result.reason == "im f != ker g"


def test_epic_and_monic_sides_are_enforced(a2_backend, k, r):
    with pytest.raises(NotSigmaEpicError):
        a2_backend.make_extension(ModuleMorphism.zero(k, k), Side.FROM_EPIC)
    with pytest.raises(NotOmegaMonicError):
        a2_backend.make_extension(ModuleMorphism(r, k, [[1, 0]]), Side.FROM_MONIC)


def test_make_extension_from_monic_validates(a2_backend, k, r):
    ext = a2_backend.make_extension(ModuleMorphism(k, r, [[0], [1]]), Side.FROM_MONIC)
    assert ext.e.source.dim == 0
    assert a2_backend.validate_extension(ext).ok


def test_extensions_of_k_by_k(a2_backend, k, r):
    found = list(a2_backend.extensions(k, k))
    assert len(found) == 2
    assert found[0].b.dim == 2
    assert isomorphic(found[1].b, r).found
    for ext in found:
        assert a2_backend.in_right(ext.right()).ok
        assert a2_backend.in_left(ext.left()).ok


def test_rotation_moves_g_to_the_front(a2_backend, k, r):
    t = a2_backend.complete_right(ModuleMorphism(k, r, [[0], [1]]))
    rotated = a2_backend.rotate_right(t)
    assert rotated.f is t.g
    assert rotated.h.source.dim == 0
