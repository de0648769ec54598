import pytest

from algebra.category import isomorphic
from algebra.constructions import direct_sum
from errors import ContractError
from frobenius.subcategory import SubcategorySpec, is_extension_closed
from frobenius.triple import FrobeniusTriple


def test_membership(a2_backend, k, r):
    add_r = SubcategorySpec(a2_backend, [r], label="proj")
    assert add_r.contains(direct_sum([r, r]).module).member
    assert add_r.contains(k).status == "no"
    full = SubcategorySpec(a2_backend, [], label="mod", full=True)
    assert full.contains(k).member


def test_describe(a2_backend, k, r):
    assert SubcategorySpec(a2_backend, []).describe() == "{0}"
    assert SubcategorySpec(a2_backend, [k, r]).describe() == "add(K, R)"
    assert SubcategorySpec(a2_backend, []).is_zero()


def test_add_k_is_not_extension_closed(a2_backend, k, r):
    result = is_extension_closed(SubcategorySpec(a2_backend, [k], label="simple"))
    assert result.status == "fail"
    assert isomorphic(result.witness.b, r).found
    assert "outside simple" in result.message


def test_add_r_is_extension_closed(a2_backend, r):
    result = is_extension_closed(SubcategorySpec(a2_backend, [r]))
    assert result.status == "pass"
    assert result.pairs == [("R", "R")]


def test_triple_requires_d_inside_z(a2_backend, k, r):
    z = SubcategorySpec(a2_backend, [k], label="simple")
    d = SubcategorySpec(a2_backend, [r], label="proj")
    with pytest.raises(ContractError):
        FrobeniusTriple(a2_backend, z, d)


def test_triple_requires_one_backend(a2_backend, a3_backend, m1, r):
    z = SubcategorySpec(a2_backend, [r])
    d = SubcategorySpec(a3_backend, [m1])
    with pytest.raises(ContractError):
        FrobeniusTriple(a2_backend, z, d)


def test_summands_of_d_stay_in_d(a2_triple):
    report = a2_triple.check_summands()
    assert report.status == "pass"
    assert report.in_d and report.in_z
    assert report.tested == 1


def test_with_d_keeps_z(a2_triple, a2_backend, r):
    other = a2_triple.with_d(SubcategorySpec(a2_backend, [], label="zero"), label="T2[0]")
    assert other.z is a2_triple.z
    assert other.label == "T2[0]"
