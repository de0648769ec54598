import numpy as np

from algebra.category import Constraint, ModuleCategory, QuotientHom, Term, Unknown
from algebra.constructions import direct_sum
from algebra.hom import hom_space
from algebra.module import ModuleMorphism

X_ON_R = [[0, 0], [1, 0]]


def test_quotient_hom_discards_the_null_part(f2, r):
    x = ModuleMorphism(r, r, X_ON_R)
    q = QuotientHom(hom_space(r, r), [x.matrix], f2)
    assert q.dim == 1
    assert q.null_rank == 1
    assert not q.coordinates(x).any()
    assert q.coordinates(ModuleMorphism.identity(r)).any()


def test_solve_one_finds_an_extension_along_the_socle(f2, k, r):
    modules = ModuleCategory(f2)
    socle = ModuleMorphism(k, r, [[0], [1]])
    t = modules.solve_one(Unknown(r, r, "t"), [Constraint([Term(0, right=socle)], socle, "t s = s")])
    assert t is not None
    assert (t @ socle).same_as(socle)


def test_solve_one_reports_a_non_split_inclusion(f2, k, r):
    modules = ModuleCategory(f2)
    socle = ModuleMorphism(k, r, [[0], [1]])
    retraction = modules.solve_one(Unknown(r, k, "t"),
                                   [Constraint([Term(0, right=socle)], ModuleMorphism.identity(k), "t s = id")])
    assert retraction is None


def test_combination_coefficients(f2, r):
    modules = ModuleCategory(f2)
    identity, x = ModuleMorphism.identity(r), ModuleMorphism(r, r, X_ON_R)
    coeffs = modules.combination_coefficients([identity, x], identity + x)
    assert coeffs.tolist() == [1, 1]
    assert modules.combination_coefficients([x], identity) is None


def test_find_inverse(f2, r):
    modules = ModuleCategory(f2)
    identity = ModuleMorphism.identity(r)
    assert modules.find_inverse(ModuleMorphism(r, r, X_ON_R)) is None
    assert modules.find_inverse(identity).same_as(identity)


def test_find_iso_between_reordered_sums(f2, k, r):
    modules = ModuleCategory(f2)
    result = modules.find_iso(direct_sum([k, r]).module, direct_sum([r, k]).module)
    assert result.found
    assert (result.inverse @ result.witness).same_as(ModuleMorphism.identity(result.witness.source))


def test_add_membership(f2, k, r):
    modules = ModuleCategory(f2)
    twice = modules.add_membership(direct_sum([r, r]).module, [r])
    assert twice.member
    assert twice.multiplicities == [2]
    missing = modules.add_membership(k, [r])
    assert missing.status == "no"
    assert missing.unmatched == ["K"]


def test_enumerate_morphisms_starts_at_zero(f2, r):
    found = list(ModuleCategory(f2).enumerate_morphisms(r, r))
    assert len(found) == 4
    assert found[0].is_zero()


def test_commuting_squares_of_identities(f2, k):
    squares = ModuleCategory(f2).commuting_squares(ModuleMorphism.identity(k), ModuleMorphism.identity(k))
    assert len(squares) == 1
    a, b = squares[0]
    assert np.array_equal(a.matrix, b.matrix)


def test_stable_null_maps_form_an_ideal(a2_stable, k, r):
    socle = ModuleMorphism(k, r, [[0], [1]])
    projection = ModuleMorphism(r, k, [[1, 0]])
    assert a2_stable.is_null(socle)
    assert a2_stable.is_null(projection)
    assert a2_stable.is_null(ModuleMorphism(r, r, X_ON_R) @ socle)
    assert not a2_stable.is_null(ModuleMorphism.identity(k))
    assert a2_stable.hom_dim(k, k) == 1
    assert a2_stable.is_zero_object(r)
