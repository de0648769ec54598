"""
Relative injective and projective objects of a triple.

An object I of D is relatively injective when every map X -> I extends
along every inflation X -> Y of Z. The inflations tested are the ones of
the conflations realised between inventory objects of Z.
"""
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional

import numpy as np
from loguru import logger

from algebra.module import Module, ModuleMorphism
from linalg.elimination import rank
from pseudotri.triangles import Extension
from .triple import FrobeniusTriple


@dataclass
class RelativeInjectives:
    injectives: List[Module] = dataclass_field(default_factory=list)
    projectives: List[Module] = dataclass_field(default_factory=list)
    conflations: int = 0
    failures: List[str] = dataclass_field(default_factory=list)
    undecided: List[str] = dataclass_field(default_factory=list)  # middle terms left out of the family

    def describe(self, which: str = "injectives") -> str:
        objects = getattr(self, which)
        return "{0}" if not objects else "add(" + ", ".join(m.label() for m in objects) + ")"


class ConflationFamily(list):
    """A list of extensions; ``undecided`` holds the middle terms whose membership in Z was inconclusive."""

    def __init__(self, extensions=()):
        super().__init__(extensions)
        self.undecided: List[str] = []


def conflation_family(triple: FrobeniusTriple, limit: Optional[int] = None) -> ConflationFamily:
    """Extensions x -> y -> z between inventory objects with y in Z."""
    backend = triple.backend
    limit = backend.budget.max_instances if limit is None else limit
    family = ConflationFamily()
    for z, x in triple.z.pairs(limit):
        for ext in backend.extensions(z, x):
            membership = triple.z.contains(ext.b)
            if membership.status == "yes":
                family.append(ext)
            elif membership.status == "inconclusive":
                family.undecided.append(ext.b.label())
    logger.debug(f"triple {triple.label}: {len(family)} conflations in the test family")
    if family.undecided:
        logger.warning(f"triple {triple.label}: membership in {triple.z.label} undecided for {family.undecided}")
    return family


def _surjects(category, images: List[ModuleMorphism], source: Module, target: Module) -> Optional[ModuleMorphism]:
    """None when the images span Hom(source, target) modulo null, else a missed basis element."""
    q = category.quotient_hom(source, target)
    if q.dim == 0:
        return None
    if images:
        columns = np.stack([q.coordinates(img) for img in images], axis=1)
        if rank(columns, category.field) == q.dim:
            return None
    for b in q.reduced:
        if category.combination_coefficients(images, b) is None:
            return b
    return None


def extension_obstruction(triple: FrobeniusTriple, obj: Module, ext: Extension) -> Optional[ModuleMorphism]:
    """A map a -> obj that does not extend along the inflation f, if any."""
    category = triple.backend.category
    images = [t @ ext.f for t in category.quotient_hom(ext.b, obj).reduced]
    return _surjects(category, images, ext.a, obj)


def lifting_obstruction(triple: FrobeniusTriple, obj: Module, ext: Extension) -> Optional[ModuleMorphism]:
    """A map obj -> c that does not lift along the deflation g, if any."""
    category = triple.backend.category
    images = [ext.g @ t for t in category.quotient_hom(obj, ext.b).reduced]
    return _surjects(category, images, obj, ext.c)


def is_relatively_injective(triple: FrobeniusTriple, obj: Module, family: List[Extension]) -> bool:
    return all(extension_obstruction(triple, obj, ext) is None for ext in family)


def is_relatively_projective(triple: FrobeniusTriple, obj: Module, family: List[Extension]) -> bool:
    return all(lifting_obstruction(triple, obj, ext) is None for ext in family)


def relative_injectives(triple: FrobeniusTriple, family: Optional[List[Extension]] = None) -> RelativeInjectives:
    family = conflation_family(triple) if family is None else family
    category = triple.backend.category
    result = RelativeInjectives(conflations=len(family), undecided=list(getattr(family, "undecided", [])))
    for obj in triple.d.inventory:
        if category.is_zero_object(obj):
            continue
        if is_relatively_injective(triple, obj, family):
            result.injectives.append(obj)
        else:
            result.failures.append(f"{obj.label()} is not relatively injective")
        if is_relatively_projective(triple, obj, family):
            result.projectives.append(obj)
        else:
            result.failures.append(f"{obj.label()} is not relatively projective")
    logger.info(f"triple {triple.label}: I_D = {result.describe('injectives')}, "
                f"P_D = {result.describe('projectives')} over {len(family)} conflations")
    return result
