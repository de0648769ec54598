"""
The triangulated case: stmod-A of a self-injective algebra A, with
Sigma = S and Omega = S* taken from the Frobenius stable category of
(mod-A, mod-A, add(A)).
"""
from typing import Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from algebra.algebra import Algebra
from algebra.category import is_self_injective
from algebra.constructions import direct_sum, regular_module, row_morphism
from algebra.module import Module, ModuleMorphism
from config import Budget
from errors import ContractError, InternalConsistencyError
from frobenius.stable import StableCategory
from frobenius.subcategory import SubcategorySpec
from frobenius.triangle import StableTriangle
from frobenius.triple import FrobeniusTriple
from .abelian import AbelianBackend
from .base import Backend, Side
from .triangles import Extension, LeftTriangle, RightTriangle, Validation


class StableBackend(Backend):
    kind = "stable"

    def __init__(self, algebra: Algebra, inventory: Sequence[Module] = (), budget: Optional[Budget] = None,
                 seed: int = 0):
        if not is_self_injective(algebra, seed, budget):
            raise ContractError(f"{algebra.name} is not self-injective: its stable category is not triangulated")
        self.abelian = AbelianBackend(algebra, budget, seed)
        regular = regular_module(algebra, name="A")
        z = SubcategorySpec(self.abelian, list(inventory) + [regular], label="mod", full=True)
        d = SubcategorySpec(self.abelian, [regular], label="proj")
        triple = FrobeniusTriple(self.abelian, z, d, label="stmod")
        self.base = StableCategory(triple, injectives=[regular], projectives=[regular], label="stmod")
        super().__init__(self.base, algebra)
        self.inventory = list(inventory)
        logger.info(f"stable backend over {algebra.name} with {len(self.inventory)} inventory objects")

    def sigma(self, a: Module) -> Module:
        return self.base.shift_object(a)

    def omega(self, a: Module) -> Module:
        return self.base.coshift_object(a)

    def sigma_map(self, f: ModuleMorphism) -> ModuleMorphism:
        return self.base.shift_map(f)

    def omega_map(self, f: ModuleMorphism) -> ModuleMorphism:
        return self.base.coshift_map(f)

    def unit(self, c: Module) -> ModuleMorphism:
        """eta_C: C -> Sigma Omega C"""
        return self.base.unit(c)

    def psi(self, e: ModuleMorphism, c: Module) -> ModuleMorphism:
        return self.sigma_map(e) @ self.unit(c)

    def psi_inverse(self, h: ModuleMorphism, a: Module) -> ModuleMorphism:
        c = h.source
        q = self.category.quotient_hom(self.omega(c), a)
        eta = self.unit(c)
        images = [self.sigma_map(b) @ eta for b in q.reduced]
        coeffs = self.category.combination_coefficients(images, h)
        if coeffs is None:
            raise InternalConsistencyError(f"psi is not onto Hom({c.label()}, Sigma {a.label()})",
                                           identity="psi bijective")
        return q.element(coeffs)

    def complete_right(self, f: ModuleMorphism) -> RightTriangle:
        t = self.base.cone(f)
        return RightTriangle(t.f, t.g, t.h)

    def complete_left(self, g: ModuleMorphism) -> LeftTriangle:
        """Kernel side: the abelian conflation K -> B + P_C -> C of (g, -pi_C), read stably."""
        pres = self.base.projective_presentation(g.target)
        pair = direct_sum([g.source, pres.projective], algebra=self.algebra,
                          name=f"{g.source.label()}+{pres.projective.label()}")
        g_c = row_morphism(pair, [g, -pres.pi])
        ext = self.abelian.make_extension(g_c, Side.FROM_EPIC, validate=False)
        ext.a.name = f"K({g.source.label()}->{g.target.label()})"
        data = self.base.standard_data(ext)
        f = pair.projections[0] @ ext.f
        e = -self.psi_inverse(data.q, f.source)
        return LeftTriangle(e, f, g)

    def in_right(self, t: RightTriangle) -> Validation:
        result = self.base.is_distinguished(StableTriangle(t.f, t.g, t.h))
        return Validation(ok=result.ok, reason=result.reason)

    def epic_monic_test(self, f: ModuleMorphism) -> Tuple[bool, bool]:
        return True, True

    def counit(self, z: Module) -> ModuleMorphism:
        """Inverse of eta_z: Sigma Omega z -> z"""
        inverse = self.category.find_inverse(self.unit(z))
        if inverse is None:
            raise InternalConsistencyError(f"unit of {z.label()} is not invertible", identity="eta iso")
        return inverse

    def extensions(self, z: Module, x: Module) -> Iterator[Extension]:
        counit = self.counit(z)
        for e in self.category.enumerate_morphisms(self.omega(z), x):
            right = self.complete_right(e)
            yield Extension(e, right.g, counit @ right.h, -self.psi(e, z))

    def inventory_objects(self) -> List[Module]:
        return [m for m in self.inventory if not self.category.is_zero_object(m)]
