"""
Injective and projective presentations of objects of Z.

An injective presentation is a conflation X -> I_X -> S_X with I_X in
add(I_D); the projective one is K_X -> P_X -> X with P_X in add(P_D).
Presentations start from every reduced hom basis map into (out of) the
relative injectives (projectives) and greedily drop components while the
datum stays a conflation of Z.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from algebra.constructions import column_morphism, direct_sum, row_morphism
from algebra.module import Module, ModuleMorphism
from errors import InconclusiveError, NotEnoughInjectivesError, NotEnoughProjectivesError, StableCatError
from pseudotri.base import Side
from pseudotri.triangles import Extension
from .triple import FrobeniusTriple


@dataclass
class InjectivePresentation:
    """Omega S_X --delta--> X --alpha--> I_X --beta--> S_X --gamma--> Sigma X"""

    x: Module
    extension: Extension
    summands: List[Module]

    @property
    def delta(self) -> ModuleMorphism:
        return self.extension.e

    @property
    def alpha(self) -> ModuleMorphism:
        return self.extension.f

    @property
    def beta(self) -> ModuleMorphism:
        return self.extension.g

    @property
    def gamma(self) -> ModuleMorphism:
        return self.extension.h

    @property
    def injective(self) -> Module:
        return self.extension.b

    @property
    def shift(self) -> Module:
        return self.extension.c


@dataclass
class ProjectivePresentation:
    """Omega X --epsilon--> K_X --iota--> P_X --pi--> X --theta--> Sigma K_X"""

    x: Module
    extension: Extension
    summands: List[Module]

    @property
    def epsilon(self) -> ModuleMorphism:
        return self.extension.e

    @property
    def iota(self) -> ModuleMorphism:
        return self.extension.f

    @property
    def pi(self) -> ModuleMorphism:
        return self.extension.g

    @property
    def theta(self) -> ModuleMorphism:
        return self.extension.h

    @property
    def projective(self) -> Module:
        return self.extension.b

    @property
    def coshift(self) -> Module:
        return self.extension.a


Part = Tuple[Module, ModuleMorphism]


def _in_z(triple: FrobeniusTriple, obj: Module, undecided: List[str]) -> bool:
    membership = triple.z.contains(obj)
    if membership.status == "inconclusive":
        undecided.append(obj.label())
    return membership.status == "yes"


def _raise_if_undecided(triple: FrobeniusTriple, x: Module, undecided: List[str]) -> None:
    if undecided:
        raise InconclusiveError(f"{x.label()}: membership in {triple.z.label} undecided for {sorted(set(undecided))}",
                                budget=triple.backend.budget.accounting())


def _greedy(parts: Sequence[Part], attempt) -> Optional[Tuple[Extension, List[Part]]]:
    selected = list(parts)
    best = attempt(selected)
    if best is None:
        return None
    for part in reversed(list(parts)):
        trial = [p for p in selected if p is not part]
        found = attempt(trial)
        if found is not None:
            selected, best = trial, found
    return best, selected


def injective_presentation(triple: FrobeniusTriple, x: Module, injectives: Sequence[Module]) -> InjectivePresentation:
    backend = triple.backend
    category = backend.category
    parts = [(i, b) for i in injectives for b in category.quotient_hom(x, i).reduced]
    undecided: List[str] = []

    def attempt(selected: List[Part]) -> Optional[Extension]:
        target = direct_sum([i for i, _ in selected], algebra=backend.algebra, name=f"I({x.label()})")
        if selected:
            alpha = column_morphism(target, [b for _, b in selected])
        else:
            alpha = ModuleMorphism.zero(x, target.module)
        if not backend.epic_monic_test(alpha)[1]:
            return None
        try:
            ext = backend.make_extension(alpha, Side.FROM_MONIC, validate=False)
        except StableCatError as exc:
            logger.debug(f"no conflation through {len(selected)} injective components of {x.label()}: {exc}")
            return None
        if not _in_z(triple, ext.c, undecided):
            return None
        return ext

    found = _greedy(parts, attempt)
    if found is None:
        _raise_if_undecided(triple, x, undecided)
        raise NotEnoughInjectivesError(f"{x.label()} has no inflation into add(I_D)", obj=x.label())
    ext, selected = found
    ext.c.name = f"S({x.label()})"
    logger.debug(f"injective presentation {x.label()} -> {ext.b.label()} -> {ext.c.label()}")
    return InjectivePresentation(x=x, extension=ext, summands=[i for i, _ in selected])


def projective_presentation(triple: FrobeniusTriple, x: Module, projectives: Sequence[Module]) -> ProjectivePresentation:
    backend = triple.backend
    category = backend.category
    parts = [(p, b) for p in projectives for b in category.quotient_hom(p, x).reduced]
    undecided: List[str] = []

    def attempt(selected: List[Part]) -> Optional[Extension]:
        source = direct_sum([p for p, _ in selected], algebra=backend.algebra, name=f"P({x.label()})")
        if selected:
            pi = row_morphism(source, [b for _, b in selected])
        else:
            pi = ModuleMorphism.zero(source.module, x)
        if not backend.epic_monic_test(pi)[0]:
            return None
        try:
            ext = backend.make_extension(pi, Side.FROM_EPIC, validate=False)
        except StableCatError as exc:
            logger.debug(f"no conflation through {len(selected)} projective components of {x.label()}: {exc}")
            return None
        if not _in_z(triple, ext.a, undecided):
            return None
        return ext

    found = _greedy(parts, attempt)
    if found is None:
        _raise_if_undecided(triple, x, undecided)
        raise NotEnoughProjectivesError(f"{x.label()} has no deflation from add(P_D)", obj=x.label())
    ext, selected = found
    ext.a.name = f"S*({x.label()})"
    logger.debug(f"projective presentation {ext.a.label()} -> {ext.b.label()} -> {x.label()}")
    return ProjectivePresentation(x=x, extension=ext, summands=[p for p, _ in selected])
