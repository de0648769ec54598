import numpy as np
import pytest

from algebra.algebra import Algebra
from algebra.constructions import regular_module
from algebra.module import Module
from algebra.presets import jordan_module, truncated_polynomial_algebra
from frobenius.stable import StableCategory
from frobenius.subcategory import SubcategorySpec
from frobenius.triple import FrobeniusTriple
from linalg.field import FieldSpec
from pseudotri.abelian import AbelianBackend
from pseudotri.stable import StableBackend


@pytest.fixture
def f2():
    return FieldSpec(characteristic=2)


@pytest.fixture
def f3():
    return FieldSpec(characteristic=3)


# F_2[x]/(x^2) with K the simple module and R the regular one
@pytest.fixture
def a2(f2):
    return truncated_polynomial_algebra(f2, 2, name="A2")


@pytest.fixture
def k(a2):
    return jordan_module(a2, 1, name="K")


@pytest.fixture
def r(a2):
    return regular_module(a2, name="R")


@pytest.fixture
def zero2(a2):
    return Module.zero(a2, name="0")


@pytest.fixture
def a2_backend(a2):
    return AbelianBackend(a2)


@pytest.fixture
def a2_triple(a2_backend, k, r):
    z = SubcategorySpec(a2_backend, [k, r], label="mod", full=True)
    d = SubcategorySpec(a2_backend, [r], label="proj")
    return FrobeniusTriple(a2_backend, z, d, label="T2")


@pytest.fixture
def a2_stable(a2_triple):
    return StableCategory(a2_triple, label="T2/I_D")


# F_3[x]/(x^3) with Jordan blocks M1, M2 and R = M3
@pytest.fixture
def a3(f3):
    return truncated_polynomial_algebra(f3, 3, name="A3")


@pytest.fixture
def m1(a3):
    return jordan_module(a3, 1, name="M1")


@pytest.fixture
def m2(a3):
    return jordan_module(a3, 2, name="M2")


@pytest.fixture
def r3(a3):
    return regular_module(a3, name="R")


@pytest.fixture
def a3_backend(a3):
    return AbelianBackend(a3)


@pytest.fixture
def a3_triple(a3_backend, m1, m2, r3):
    z = SubcategorySpec(a3_backend, [m1, m2, r3], label="mod", full=True)
    d = SubcategorySpec(a3_backend, [r3], label="proj")
    return FrobeniusTriple(a3_backend, z, d, label="T3")


@pytest.fixture
def a3_stable(a3_triple):
    return StableCategory(a3_triple, label="T3/I_D")


@pytest.fixture
def a3_stmod(a3, m1, m2):
    return StableBackend(a3, [m1, m2])


# F_2[x]/(x^4), whose stable category has three indecomposables
@pytest.fixture
def a4(f2):
    return truncated_polynomial_algebra(f2, 4, name="A4")


@pytest.fixture
def a4_blocks(a4):
    return [jordan_module(a4, i, name=f"J{i}") for i in (1, 2, 3)]


@pytest.fixture
def a4_stmod(a4, a4_blocks):
    return StableBackend(a4, a4_blocks)


# path algebra of 1 -> 2 on e1, e2, a with a = e2 a e1; not self-injective
@pytest.fixture
def path_algebra(f2):
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 0, 0] = 1
    c[1, 1, 1] = 1
    c[1, 2, 2] = 1
    c[2, 0, 2] = 1
    return Algebra(f2, c, [1, 1, 0], name="A_2 quiver")
