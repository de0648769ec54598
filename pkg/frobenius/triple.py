from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional

from loguru import logger

from algebra.constructions import direct_sum
from algebra.decompose import decompose
from errors import ContractError
from pseudotri.base import Backend
from .subcategory import SubcategorySpec


@dataclass
class SummandReport:
    """(DS) on sums of D-inventory objects, read two ways."""

    status: str
    in_d: bool = True  # summands land in D
    in_z: bool = True  # summands land in Z (literal reading)
    tested: int = 0
    witness: List[str] = dataclass_field(default_factory=list)


class FrobeniusTriple:
    """(C, Z, D) with D contained in Z, both given by inventories over one backend."""

    def __init__(self, backend: Backend, z: SubcategorySpec, d: SubcategorySpec, label: str = "T",
                 check: bool = True):
        if z.backend is not backend or d.backend is not backend:
            raise ContractError(f"triple {label}: subcategories live over a different backend")
        self.backend = backend
        self.z = z
        self.d = d
        self.label = label
        if check:
            for obj in d.inventory:
                membership = z.contains(obj)
                if not membership.member:
                    raise ContractError(f"triple {label}: {obj.label()} lies in D but not in Z",
                                        membership=membership.status)
        logger.debug(f"triple {label}: Z = {z.describe()}, D = {d.describe()}")

    def with_d(self, d: SubcategorySpec, label: Optional[str] = None) -> "FrobeniusTriple":
        return FrobeniusTriple(self.backend, self.z, d, label or f"{self.label}'")

    def check_summands(self, limit: Optional[int] = None) -> SummandReport:
        """Summands of D1 + D2 for D-inventory pairs lie in D (and in Z)."""
        backend = self.backend
        limit = backend.budget.max_instances if limit is None else limit
        report = SummandReport(status="pass")
        for a, b in self.d.pairs(limit):
            total = direct_sum([a, b], algebra=backend.algebra)
            decomposition = decompose(total.module, backend.seed, backend.budget)
            report.tested += 1
            if not decomposition.complete:
                report.status = "inconclusive"
            for summand in decomposition.summands:
                in_d = self.d.contains(summand.module)
                in_z = self.z.contains(summand.module)
                if in_d.status == "no":
                    report.in_d = False
                    report.witness.append(f"{summand.module.label()} of {a.label()} + {b.label()} not in D")
                if in_z.status == "no":
                    report.in_z = False
                if "inconclusive" in (in_d.status, in_z.status):
                    report.status = "inconclusive"
        if not report.in_d:
            report.status = "fail"
        return report

    def __repr__(self) -> str:
        return f"<FrobeniusTriple {self.label}: Z = {self.z.describe()}, D = {self.d.describe()}>"
