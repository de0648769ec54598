"""
Ext^1 between modules, computed from a projective presentation of the
first argument, with realisation of classes as short exact sequences.
"""
from dataclasses import dataclass
from typing import List

import numpy as np
from loguru import logger

from linalg.elimination import rank
from .category import ModuleCategory, QuotientHom
from .constructions import (
    DirectSum, KCI, column_morphism, direct_sum, factor_through_cokernel, free_module,
    generated_subspace, kci, map_from_regular, row_morphism,
)
from .module import Module, ModuleMorphism


@dataclass
class ShortExactSequence:
    """0 -> left --f--> middle --g--> right -> 0"""

    f: ModuleMorphism
    g: ModuleMorphism

    @property
    def left(self) -> Module:
        return self.f.source

    @property
    def middle(self) -> Module:
        return self.f.target

    @property
    def right(self) -> Module:
        return self.g.target

    def is_exact(self) -> bool:
        field = self.f.field
        if not (self.g @ self.f).is_zero():
            return False
        rf = rank(self.f.matrix, field)
        rg = rank(self.g.matrix, field)
        return rf == self.left.dim and rg == self.right.dim and rf + rg == self.middle.dim


@dataclass
class ProjectivePresentation:
    """0 -> syzygy --iota--> free --pi--> z -> 0 with free a free module."""

    z: Module
    free: DirectSum
    pi: ModuleMorphism
    iota: ModuleMorphism
    data: KCI

    @property
    def syzygy(self) -> Module:
        return self.iota.source


def generating_vectors(z: Module) -> List[np.ndarray]:
    """A greedy generating set of z, taken from the standard basis."""
    field = z.field
    chosen: List[np.ndarray] = []
    span = field.zeros(z.dim, 0)
    for i in range(z.dim):
        vector = field.identity(z.dim)[:, i]
        if span.shape[1] and rank(np.hstack([span, vector.reshape(-1, 1)]), field) == span.shape[1]:
            continue
        chosen.append(vector)
        span = generated_subspace(z, np.stack(chosen, axis=1))
        if span.shape[1] == z.dim:
            break
    return chosen


def projective_cover_presentation(z: Module) -> ProjectivePresentation:
    gens = generating_vectors(z)
    free = free_module(z.algebra, len(gens))
    if gens:
        pi = row_morphism(free, [map_from_regular(z, v) for v in gens])
    else:
        pi = ModuleMorphism.zero(free.module, z)
    data = kci(pi)
    return ProjectivePresentation(z=z, free=free, pi=pi, iota=data.kernel_inclusion, data=data)


@dataclass
class ExtGroup:
    """
    Ext^1(z, x) = Hom(syzygy, x) / restrictions of Hom(free, x).

    ``classes`` are cocycles syzygy -> x spanning a complement of the
    coboundaries.
    """

    z: Module
    x: Module
    presentation: ProjectivePresentation
    classes: List[ModuleMorphism]

    @property
    def dim(self) -> int:
        return len(self.classes)

    def cocycle(self, coeffs) -> ModuleMorphism:
        field = self.x.field
        total = ModuleMorphism.zero(self.presentation.syzygy, self.x)
        for c, cls in zip(field.reduce(coeffs), self.classes):
            if c:
                total = total + cls.scale(int(c))
        return total

    def realize(self, coeffs) -> ShortExactSequence:
        """Pushout of the presentation along the cocycle: 0 -> x -> E -> z -> 0. The zero class is split."""
        xi = self.cocycle(coeffs)
        if xi.is_zero():
            split = direct_sum([self.x, self.z], name=f"{self.x.label()} + {self.z.label()}")
            return ShortExactSequence(f=split.injections[0], g=split.projections[1])
        pres = self.presentation
        pair = direct_sum([self.x, pres.free.module], algebra=self.x.algebra)
        relation = column_morphism(pair, [xi, -pres.iota])
        data = kci(relation)
        middle = data.cokernel
        middle.name = f"E({self.z.label()},{self.x.label()})"
        f = data.cokernel_projection @ pair.injections[0]
        g = factor_through_cokernel(data, row_morphism(pair, [ModuleMorphism.zero(self.x, self.z), pres.pi]))
        return ShortExactSequence(f=f, g=g)


def ext1(z: Module, x: Module) -> ExtGroup:
    pres = projective_cover_presentation(z)
    category = ModuleCategory(z.field)
    cocycles = category.hom(pres.syzygy, x)
    coboundaries = [phi @ pres.iota for phi in category.hom(pres.free.module, x).morphisms()]
    if cocycles.dim == 0:
        return ExtGroup(z=z, x=x, presentation=pres, classes=[])
    restricted = QuotientHom(cocycles, [c.matrix for c in coboundaries], category.field)
    logger.debug(f"dim Ext^1({z.label()}, {x.label()}) = {len(restricted.reduced)}")
    return ExtGroup(z=z, x=x, presentation=pres, classes=restricted.reduced)

