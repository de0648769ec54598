from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from algebra.category import Membership
from algebra.module import Module
from pseudotri.base import Backend
from pseudotri.triangles import Extension


class SubcategorySpec:
    """
    add(inventory) inside a backend: full, additive and replete.

    ``full=True`` marks the whole backend category; membership is then
    answered without decomposing anything.
    """

    def __init__(self, backend: Backend, inventory: Sequence[Module], label: str = "Z", full: bool = False):
        self.backend = backend
        self.inventory = list(inventory)
        self.label = label
        self.full = full
        self._memberships: Dict = {}

    def contains(self, x: Module) -> Membership:
        if self.full:
            return Membership("yes")
        if x.key not in self._memberships:
            self._memberships[x.key] = self.backend.category.add_membership(x, self.inventory)
            logger.debug(f"{x.label()} in {self.label}: {self._memberships[x.key].status}")
        return self._memberships[x.key]

    def is_zero(self) -> bool:
        return all(self.backend.category.is_zero_object(m) for m in self.inventory)

    def pairs(self, limit: int) -> Iterator[Tuple[Module, Module]]:
        count = 0
        for z in self.inventory:
            for x in self.inventory:
                if count >= limit:
                    return
                count += 1
                yield z, x

    def describe(self) -> str:
        if not self.inventory:
            return "{0}"
        names = ", ".join(m.label() for m in self.inventory)
        return f"add({names})"

    def __repr__(self) -> str:
        return f"<SubcategorySpec {self.label} = {self.describe()}{' (full)' if self.full else ''}>"


@dataclass
class ClosureResult:
    status: str  # "pass" | "fail" | "inconclusive"
    tested: int = 0
    witness: Optional[Extension] = None
    message: str = ""
    pairs: List[Tuple[str, str]] = dataclass_field(default_factory=list)


def is_extension_closed(z: SubcategorySpec, limit: Optional[int] = None) -> ClosureResult:
    """Every realised extension between inventory objects has its middle term in Z."""
    backend = z.backend
    limit = backend.budget.max_instances if limit is None else limit
    result = ClosureResult(status="pass")
    for zo, xo in z.pairs(limit):
        result.pairs.append((zo.label(), xo.label()))
        for ext in backend.extensions(zo, xo):
            result.tested += 1
            membership = z.contains(ext.b)
            if membership.status == "no":
                logger.debug(f"{z.label} not closed: middle term {ext.b.label()} of {xo.label()} -> ? -> {zo.label()}")
                return ClosureResult(status="fail", tested=result.tested, witness=ext, pairs=result.pairs,
                                     message=f"middle term {ext.b.label()} has summands {membership.unmatched} outside {z.label}")
            if membership.status == "inconclusive":
                result.status = "inconclusive"
                result.message = f"could not decide membership of {ext.b.label()}"
    return result
