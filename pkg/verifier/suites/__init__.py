from .frobenius_theory import verify_frobenius_theory
from .pseudotriangulation import verify_pseudotriangulation
from .triangulated import verify_tr_suite

__all__ = ["verify_frobenius_theory", "verify_pseudotriangulation", "verify_tr_suite"]
