"""
Finite instance families drawn from an inventory: morphisms between
inventory objects, composable pairs and extensions, each capped by the
budget's ``max_instances``.
"""
import math
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.category import LinearCategory
from algebra.module import Module, ModuleMorphism
from errors import StableCatError
from .base import Backend, Side
from .triangles import Extension


@dataclass
class Finding:
    """One violated instance, with the morphisms needed to replay it."""

    message: str
    validator: str
    morphisms: Dict[str, ModuleMorphism] = dataclass_field(default_factory=dict)


@dataclass
class Sweep:
    family: str
    tested: int = 0
    findings: List[Finding] = dataclass_field(default_factory=list)
    inconclusive: Optional[str] = None

    @property
    def status(self) -> str:
        if self.findings:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    def fail(self, message: str, validator: str, **morphisms: ModuleMorphism) -> None:
        self.findings.append(Finding(message, validator, morphisms))


def object_pairs(inventory: Sequence[Module]) -> List[Tuple[Module, Module]]:
    return [(m, n) for m in inventory for n in inventory]


def morphisms(category: LinearCategory, inventory: Sequence[Module], limit: Optional[int] = None,
              predicate: Optional[Callable[[ModuleMorphism], bool]] = None) -> Iterator[ModuleMorphism]:
    """Morphisms between inventory objects, spread evenly over the pairs."""
    limit = category.budget.max_instances if limit is None else limit
    pairs = object_pairs(inventory)
    if not pairs:
        return
    per_pair = max(2, math.ceil(limit / len(pairs)))
    count = 0
    for m, n in pairs:
        taken = 0
        for f in category.enumerate_morphisms(m, n, limit=per_pair):
            if count >= limit:
                return
            if taken >= per_pair:
                break
            if predicate is not None and not predicate(f):
                continue
            taken += 1
            count += 1
            yield f


def sigma_epics(backend: Backend, inventory: Sequence[Module], limit: Optional[int] = None) -> Iterator[ModuleMorphism]:
    return morphisms(backend.category, inventory, limit, lambda f: backend.epic_monic_test(f)[0])


def omega_monics(backend: Backend, inventory: Sequence[Module], limit: Optional[int] = None) -> Iterator[ModuleMorphism]:
    return morphisms(backend.category, inventory, limit, lambda f: backend.epic_monic_test(f)[1])


def composable_pairs(category: LinearCategory, inventory: Sequence[Module], limit: Optional[int] = None,
                     predicate: Optional[Callable[[ModuleMorphism, ModuleMorphism], bool]] = None
                     ) -> Iterator[Tuple[ModuleMorphism, ModuleMorphism]]:
    """(l, m) with l: X -> M and m: M -> Y among inventory objects."""
    limit = category.budget.max_instances if limit is None else limit
    per_hom = max(2, math.isqrt(max(limit, 1)))
    count = 0
    for x in inventory:
        for mid in inventory:
            for y in inventory:
                firsts = list(category.enumerate_morphisms(x, mid, limit=per_hom))[:per_hom]
                seconds = list(category.enumerate_morphisms(mid, y, limit=per_hom))[:per_hom]
                for l in firsts:
                    for m in seconds:
                        if count >= limit:
                            return
                        if predicate is not None and not predicate(l, m):
                            continue
                        count += 1
                        yield l, m


def extensions(backend: Backend, inventory: Sequence[Module], limit: Optional[int] = None) -> List[Extension]:
    """Extensions completed from the Omega-monic instance morphisms."""
    out = []
    for f in omega_monics(backend, inventory, limit):
        try:
            out.append(backend.make_extension(f, Side.FROM_MONIC, validate=False))
        except StableCatError:
            continue
    return out
