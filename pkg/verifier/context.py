from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

from algebra.module import Module
from frobenius.stable import StableCategory
from frobenius.subcategory import SubcategorySpec
from frobenius.triple import FrobeniusTriple
from pseudotri.base import Backend
from pseudotri.instances import Sweep
from .report import CheckReport, witness_payload


@dataclass
class VerificationContext:
    """Everything a check may look at: one backend, its inventory and the declared triples."""

    backend: Backend
    inventory: List[Module]
    label: str = "run"
    stable: Optional[StableCategory] = None
    triples: List[FrobeniusTriple] = dataclass_field(default_factory=list)
    chains: List[Tuple[FrobeniusTriple, SubcategorySpec]] = dataclass_field(default_factory=list)

    @property
    def budget(self):
        return self.backend.budget

    @property
    def category(self):
        return self.backend.category


def report_from_sweep(check_id: str, family: str, sweep: Sweep, context: VerificationContext) -> CheckReport:
    if sweep.findings:
        first = sweep.findings[0]
        return CheckReport(check_id=check_id, family=family, status="fail", tested=sweep.tested,
                           message=f"{first.message} ({len(sweep.findings)} of {sweep.tested} instances)",
                           witness=witness_payload(first.validator, **first.morphisms))
    if sweep.inconclusive:
        return CheckReport(check_id=check_id, family=family, status="inconclusive", tested=sweep.tested,
                           message=sweep.inconclusive, budget=context.budget.accounting())
    return CheckReport(check_id=check_id, family=family, status="pass", tested=sweep.tested,
                       message=f"{sweep.tested} instances")
