import json
from typing import Any, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from algebra.algebra import Algebra
from algebra.module import Module, ModuleMorphism
from errors import ContractError

STATUSES = ("pass", "fail", "inconclusive")


class CheckReport(BaseModel):
    """Outcome of one check family"""

    check_id: str = Field(..., description="Identifier of the checked statement, e.g. RTR2 or TR4")

    family: str = Field(default="", description="Suite the check belongs to")

    status: str = Field(..., description="pass | fail | inconclusive")

    message: str = Field(default="", description="First violation, or a summary")

    tested: int = Field(default=0, ge=0, description="Instances examined")

    witness: Dict[str, Any] = Field(default_factory=dict, description="Replayable counterexample of a fail")

    budget: Dict[str, int] = Field(default_factory=dict, description="Budgets in force when inconclusive")

    def canonical(self) -> Dict[str, Any]:
        return json.loads(json.dumps(self.model_dump(), sort_keys=True, default=str))


def witness_payload(validator: str, **morphisms: Optional[ModuleMorphism]) -> Dict[str, Any]:
    """
    Morphisms plus every object they touch, so that the violation can be
    rebuilt without the workspace. Objects are numbered in order of first
    appearance.
    """
    objects: Dict[Any, str] = {}
    object_payloads: Dict[str, Any] = {}

    def ref(m: Module) -> str:
        if m.key not in objects:
            objects[m.key] = f"o{len(objects)}"
            object_payloads[objects[m.key]] = m.to_payload()
        return objects[m.key]

    payload = {}
    for name in sorted(morphisms):
        f = morphisms[name]
        if f is None:
            continue
        payload[name] = {"source": ref(f.source), "target": ref(f.target), "matrix": f.matrix.tolist()}
    return {"validator": validator, "objects": object_payloads, "morphisms": payload}


def rebuild_morphisms(witness: Dict[str, Any], algebra: Algebra) -> Dict[str, ModuleMorphism]:
    if "morphisms" not in witness or "objects" not in witness:
        raise ContractError("witness carries no morphisms to rebuild")
    objects = {}
    for ref, data in witness["objects"].items():
        action = np.array(data["action"], dtype=np.int64).reshape(algebra.dim, data["dim"], data["dim"])
        objects[ref] = Module(algebra, action, name=data["name"], dim=data["dim"])
    return {name: ModuleMorphism(objects[m["source"]], objects[m["target"]],
                                 np.array(m["matrix"], dtype=np.int64).reshape(objects[m["target"]].dim,
                                                                              objects[m["source"]].dim))
            for name, m in witness["morphisms"].items()}


def sort_reports(reports: Iterable[CheckReport]) -> List[CheckReport]:
    return sorted(reports, key=lambda r: (r.check_id, r.family))


def exit_status(reports: Iterable[CheckReport]) -> int:
    """0 when everything passes, 1 on any fail, else 2 on any inconclusive."""
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return 1
    if "inconclusive" in statuses:
        return 2
    return 0


def summary_table(reports: Iterable[CheckReport]) -> pd.DataFrame:
    rows = [{"check": r.check_id, "family": r.family, "status": r.status, "tested": r.tested,
             "message": r.message} for r in sort_reports(reports)]
    return pd.DataFrame(rows, columns=["check", "family", "status", "tested", "message"])


def reports_to_json(reports: Iterable[CheckReport], extra: Optional[Dict[str, Any]] = None) -> str:
    body = {"reports": [r.canonical() for r in sort_reports(reports)]}
    if extra:
        body.update(extra)
    return json.dumps(body, sort_keys=True, indent=2)
