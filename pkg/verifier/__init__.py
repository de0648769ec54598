from .base import Check
from .context import VerificationContext
from .decorator import check
from .faults import FAULTS, FlippedPsiBackend, UnsignedRotationBackend
from .registry import CheckRegistry
from .replay import replay
from .report import CheckReport, exit_status, reports_to_json, summary_table, witness_payload
from .suites import verify_frobenius_theory, verify_pseudotriangulation, verify_tr_suite

__all__ = [
    "Check", "CheckRegistry", "CheckReport", "FAULTS", "FlippedPsiBackend", "UnsignedRotationBackend",
    "VerificationContext", "check", "exit_status", "replay", "reports_to_json", "summary_table",
    "verify_frobenius_theory", "verify_pseudotriangulation", "verify_tr_suite", "witness_payload",
]
