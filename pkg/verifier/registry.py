import importlib
from types import ModuleType
from typing import Dict, List, Optional
from loguru import logger

from errors import InconclusiveError
from .base import Check
from .report import CheckReport, sort_reports, witness_payload


class CheckRegistry:
    """
    Registry for the checks of one or more suites.
    (optional to register all checks under session)
    """

    def __init__(self, session_id: str = None):
        self._checks: Dict[str, Check] = {}
        self._session_id = session_id

    def register(self, check: Check):
        """
        Register a single Check instance & inject session_id.
        """
        if check.check_id in self._checks:
            raise ValueError(f"Check '{check.check_id}' is already registered.")
        logger.debug(f"register new check {check.check_id} and inject session `{self._session_id}`")
        check.session_id = self._session_id
        self._checks[check.check_id] = check

    def register_from_module(self, module: ModuleType):
        """
        Register all checks from a given module that have been decorated.
        """
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            if isinstance(attr, Check):
                self.register(attr)

    def get(self, check_id: str) -> Check:
        return self._checks.get(check_id)

    def list_checks(self) -> List[str]:
        return [check.to_string() for check in self._checks.values()]

    def to_string(self) -> str:
        return "\n".join(self.list_checks())

    def load_module(self, module_path: str):
        """
        Dynamically import a module and register its checks.
        Example: registry.load_module("verifier.suites.triangulated")
        """
        module = importlib.import_module(module_path)
        self.register_from_module(module)

    def run(self, context, only: Optional[List[str]] = None) -> List[CheckReport]:
        """
        Run every registered check (or the ids in ``only``) on the context.
        Exceptions never escape: budget exhaustion becomes an inconclusive
        report, anything else a fail naming the exception.
        """
        reports = []
        for check_id in sorted(self._checks):
            if only is not None and check_id not in only:
                continue
            check = self._checks[check_id]
            try:
                report = check(context)
            except InconclusiveError as exc:
                logger.warning(f"check {check_id} inconclusive: {exc.message}")
                report = CheckReport(check_id=check_id, family=check.family, status="inconclusive",
                                     message=exc.message, budget=context.budget.accounting())
            except Exception as exc:
                logger.error(f"check {check_id} raised {type(exc).__name__}: {exc}")
                witness = witness_payload("exception")
                witness["exception"] = {"type": type(exc).__name__, "message": str(exc),
                                        "details": getattr(exc, "details", {})}
                report = CheckReport(check_id=check_id, family=check.family, status="fail",
                                     message=f"{type(exc).__name__}: {exc}", witness=witness)
            if report.status == "fail":
                logger.error(f"check {check_id} failed: {report.message}")
            else:
                logger.debug(f"check {check_id}: {report.status} over {report.tested} instances")
            reports.append(report)
        return sort_reports(reports)
