"""
The abelian pseudo-triangulation of mod-A: Sigma = Omega = 0, right
triangles are right exact sequences, left triangles are left exact ones.
"""
from typing import Iterator, Optional, Tuple

from loguru import logger

from algebra.algebra import Algebra
from algebra.category import ModuleCategory
from algebra.constructions import kci
from algebra.ext import ext1
from algebra.module import Module, ModuleMorphism
from config import Budget
from linalg.elimination import rank
from linalg.sampling import coefficient_vectors
from .base import Backend, Side
from .triangles import Extension, LeftTriangle, RightTriangle, Validation


class AbelianBackend(Backend):
    kind = "abelian"

    def __init__(self, algebra: Algebra, budget: Optional[Budget] = None, seed: int = 0):
        super().__init__(ModuleCategory(algebra.field, budget, seed), algebra)
        self._zero = Module.zero(algebra)

    def sigma(self, a: Module) -> Module:
        return self._zero

    def omega(self, a: Module) -> Module:
        return self._zero

    def sigma_map(self, f: ModuleMorphism) -> ModuleMorphism:
        return ModuleMorphism.zero(self._zero, self._zero)

    def omega_map(self, f: ModuleMorphism) -> ModuleMorphism:
        return ModuleMorphism.zero(self._zero, self._zero)

    def psi(self, e: ModuleMorphism, c: Module) -> ModuleMorphism:
        return ModuleMorphism.zero(c, self._zero)

    def psi_inverse(self, h: ModuleMorphism, a: Module) -> ModuleMorphism:
        return ModuleMorphism.zero(self._zero, a)

    def complete_right(self, f: ModuleMorphism) -> RightTriangle:
        data = kci(f)
        coker = data.cokernel
        if coker.name is None:
            coker.name = f"coker({f.source.label()}->{f.target.label()})"
        return RightTriangle(f, data.cokernel_projection, ModuleMorphism.zero(coker, self._zero))

    def complete_left(self, g: ModuleMorphism) -> LeftTriangle:
        data = kci(g)
        ker = data.kernel
        if ker.name is None:
            ker.name = f"ker({g.source.label()}->{g.target.label()})"
        return LeftTriangle(ModuleMorphism.zero(self._zero, ker), data.kernel_inclusion, g)

    def in_right(self, t: RightTriangle) -> Validation:
        field = self.field
        if t.g.source.key != t.f.target.key or t.h.source.key != t.g.target.key:
            return Validation(ok=False, reason="maps are not composable")
        if t.h.target.dim != 0:
            return Validation(ok=False, reason="third map must land in Sigma A = 0")
        if not (t.g @ t.f).is_zero():
            return Validation(ok=False, reason="g o f != 0")
        rg = rank(t.g.matrix, field)
        if rg != t.c.dim:
            return Validation(ok=False, reason="g is not surjective")
        if rank(t.f.matrix, field) != t.b.dim - t.c.dim:
            return Validation(ok=False, reason="im f != ker g")
        return Validation(ok=True)

    def in_left(self, t: LeftTriangle) -> Validation:
        field = self.field
        if t.g.source.key != t.f.target.key or t.e.target.key != t.f.source.key:
            return Validation(ok=False, reason="maps are not composable")
        if t.e.source.dim != 0:
            return Validation(ok=False, reason="first map must start at Omega C = 0")
        if not (t.g @ t.f).is_zero():
            return Validation(ok=False, reason="g o f != 0")
        if rank(t.f.matrix, field) != t.a.dim:
            return Validation(ok=False, reason="f is not injective")
        if t.a.dim != t.b.dim - rank(t.g.matrix, field):
            return Validation(ok=False, reason="im f != ker g")
        return Validation(ok=True)

    def epic_monic_test(self, f: ModuleMorphism) -> Tuple[bool, bool]:
        r = rank(f.matrix, self.field)
        return r == f.target.dim, r == f.source.dim

    def obstruction(self, f: ModuleMorphism, side: Side):
        data = kci(f)
        return data.cokernel.to_payload() if side == Side.FROM_EPIC else data.kernel.to_payload()

    def extensions(self, z: Module, x: Module) -> Iterator[Extension]:
        group = ext1(z, x)
        rng = self.category.rng("extensions", z.label(), x.label())
        for coeffs in coefficient_vectors(group.dim, self.field, self.budget.enumeration_limit,
                                          self.budget.random_trials, rng):
            ses = group.realize(coeffs)
            logger.debug(f"realised extension class {coeffs.tolist()} of {z.label()} by {x.label()}")
            yield Extension(ModuleMorphism.zero(self._zero, x), ses.f, ses.g, ModuleMorphism.zero(z, self._zero))
