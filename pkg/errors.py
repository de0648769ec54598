"""
Structured exceptions shared by every package.

Each error carries a machine-readable ``code`` and a ``details`` dict so the
CLI can serialise it next to the check reports.
"""
from typing import Any, Dict, Optional


class StableCatError(Exception):
    """Base exception for the engine."""

    code = "stablecat_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None, **kwargs: Any):
        super().__init__(message)
        self.message = message
        self.details = dict(details or {})
        self.details.update(kwargs)

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": self.message, "details": self.details}

    def __str__(self) -> str:
        return self.message


class ContractError(StableCatError):
    """A precondition of an operation does not hold (shape, algebra, hypothesis)."""

    code = "contract_error"


class WorkspaceError(StableCatError):
    """Workspace file cannot be parsed, resolved or validated."""

    code = "workspace_error"

    def __init__(self, message: str, entity: Optional[str] = None, line: Optional[int] = None,
                 column: Optional[int] = None, **kwargs: Any):
        details = kwargs.pop("details", None) or {}
        if entity is not None:
            details["entity"] = entity
        if line is not None:
            details["line"] = line
            details["column"] = column
        super().__init__(message, details, **kwargs)
        self.entity = entity


class NotSigmaEpicError(ContractError):
    code = "not_sigma_epic"

    def __init__(self, message: str, cokernel: Any = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.cokernel = cokernel


class NotOmegaMonicError(ContractError):
    code = "not_omega_monic"

    def __init__(self, message: str, kernel: Any = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.kernel = kernel


class NotEnoughInjectivesError(StableCatError):
    code = "not_enough_injectives"

    def __init__(self, message: str, obj: Any = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.obj = obj


class NotEnoughProjectivesError(StableCatError):
    code = "not_enough_projectives"

    def __init__(self, message: str, obj: Any = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.obj = obj


class InconclusiveError(StableCatError):
    """A bounded search ran out of budget before deciding."""

    code = "inconclusive"

    def __init__(self, message: str, budget: Optional[Dict[str, int]] = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.budget = dict(budget or {})
        self.details["budget"] = self.budget


class InternalConsistencyError(StableCatError):
    """An identity that holds by construction failed to validate."""

    code = "internal_consistency"

    def __init__(self, message: str, identity: Optional[str] = None, **kwargs: Any):
        super().__init__(message, **kwargs)
        self.identity = identity
        if identity is not None:
            self.details["identity"] = identity
