from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Iterator, Tuple

from loguru import logger

from algebra.algebra import Algebra
from algebra.category import LinearCategory
from algebra.constructions import direct_sum
from algebra.module import Module, ModuleMorphism
from errors import InternalConsistencyError, NotOmegaMonicError, NotSigmaEpicError
from .triangles import Extension, LeftTriangle, RightTriangle, Validation


class Side(str, Enum):
    """Which end of an extension is given"""
    FROM_MONIC = "from_monic"
    FROM_EPIC = "from_epic"


class Backend(ABC):
    """
    A pseudo-triangulated category (Sigma, Omega, right triangles, left
    triangles, psi) whose objects are modules.

    Morphisms are compared in ``self.category``; the right and left
    triangulations are membership tests, not stored classes.
    """

    kind = "abstract"

    def __init__(self, category: LinearCategory, algebra: Algebra):
        self.category = category
        self.algebra = algebra
        self.field = category.field
        self.budget = category.budget
        self.seed = category.seed

    @abstractmethod
    def sigma(self, a: Module) -> Module:
        """ Shift of an object """
        raise NotImplementedError()

    @abstractmethod
    def omega(self, a: Module) -> Module:
        """ Coshift of an object """
        raise NotImplementedError()

    @abstractmethod
    def sigma_map(self, f: ModuleMorphism) -> ModuleMorphism:
        raise NotImplementedError()

    @abstractmethod
    def omega_map(self, f: ModuleMorphism) -> ModuleMorphism:
        raise NotImplementedError()

    @abstractmethod
    def psi(self, e: ModuleMorphism, c: Module) -> ModuleMorphism:
        """ psi: C(Omega c, a) -> C(c, Sigma a), applied to e: Omega c -> a """
        raise NotImplementedError()

    @abstractmethod
    def psi_inverse(self, h: ModuleMorphism, a: Module) -> ModuleMorphism:
        """ Inverse of psi, applied to h: c -> Sigma a """
        raise NotImplementedError()

    @abstractmethod
    def complete_right(self, f: ModuleMorphism) -> RightTriangle:
        raise NotImplementedError()

    @abstractmethod
    def complete_left(self, g: ModuleMorphism) -> LeftTriangle:
        raise NotImplementedError()

    @abstractmethod
    def in_right(self, t: RightTriangle) -> Validation:
        raise NotImplementedError()

    @abstractmethod
    def epic_monic_test(self, f: ModuleMorphism) -> Tuple[bool, bool]:
        """ (Sigma-epic, Omega-monic) """
        raise NotImplementedError()

    @abstractmethod
    def extensions(self, z: Module, x: Module) -> Iterator[Extension]:
        """ Extensions x -> ? -> z, enumerated within budget """
        raise NotImplementedError()

    def in_left(self, t: LeftTriangle) -> Validation:
        result = self.in_right(RightTriangle(t.f, t.g, -self.psi(t.e, t.c)))
        return result if result.ok else Validation(ok=False, reason=f"(f, g, -psi(e)) fails: {result.reason}")

    def zero_object(self) -> Module:
        return Module.zero(self.algebra)

    def obstruction(self, f: ModuleMorphism, side: Side) -> Any:
        """Witness attached to Sigma-epic / Omega-monic failures."""
        return None

    def rotate_right(self, t: RightTriangle) -> RightTriangle:
        return RightTriangle(t.g, t.h, -self.sigma_map(t.f))

    def rotate_left(self, t: LeftTriangle) -> LeftTriangle:
        return LeftTriangle(-self.omega_map(t.g), t.e, t.f)

    def validate_extension(self, ext: Extension) -> Validation:
        right = self.in_right(ext.right())
        if not right:
            return Validation(ok=False, reason=f"not a right triangle: {right.reason}")
        left = self.in_left(ext.left())
        if not left:
            return Validation(ok=False, reason=f"not a left triangle: {left.reason}")
        if not self.category.equal(ext.h, -self.psi(ext.e, ext.c)):
            return Validation(ok=False, reason="h != -psi(e)")
        return Validation(ok=True)

    def make_extension(self, m: ModuleMorphism, side: Side, validate: bool = True) -> Extension:
        sigma_epic, omega_monic = self.epic_monic_test(m)
        if side == Side.FROM_EPIC:
            if not sigma_epic:
                raise NotSigmaEpicError(f"{m.source.label()} -> {m.target.label()} is not Sigma-epic",
                                        cokernel=self.obstruction(m, side))
            left = self.complete_left(m)
            ext = Extension(left.e, left.f, left.g, -self.psi(left.e, left.c))
        else:
            if not omega_monic:
                raise NotOmegaMonicError(f"{m.source.label()} -> {m.target.label()} is not Omega-monic",
                                         kernel=self.obstruction(m, side))
            right = self.complete_right(m)
            ext = Extension(-self.psi_inverse(right.h, right.a), right.f, right.g, right.h)
        if validate:
            result = self.validate_extension(ext)
            if not result:
                raise InternalConsistencyError(f"completed extension does not validate: {result.reason}",
                                               identity="extension")
        logger.debug(f"extension {ext.a.label()} -> {ext.b.label()} -> {ext.c.label()} ({side.value})")
        return ext

    def biproduct_extension(self, a: Module, b: Module) -> Extension:
        total = direct_sum([a, b], algebra=self.algebra, name=f"{a.label()}+{b.label()}")
        return Extension(ModuleMorphism.zero(self.omega(b), a), total.injections[0], total.projections[1],
                         ModuleMorphism.zero(b, self.sigma(a)))

    def describe(self) -> str:
        return f"{self.kind} backend over {self.algebra.name}"

    def __repr__(self) -> str:
        return f"<Backend {self.describe()}>"
