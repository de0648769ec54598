"""
Re-run the validator named in a fail report's witness.

Morphism witnesses are rebuilt from their matrices and fed to the same
instance decider that produced them; triple-level witnesses re-run their
check on the named triple alone.
"""
from dataclasses import replace
from typing import Callable, Dict, Optional

from loguru import logger

from algebra.module import ModuleMorphism
from errors import ContractError
from frobenius.stable import StableCategory
from pseudotri.base import Backend, Side
from pseudotri.gluing import (ac1_failure, ac2_failure, exactness_failure, g1_failure, g2_failure,
                              left_exactness_failure, psi_failure)
from pseudotri.triangles import LeftTriangle, RightTriangle
from .context import VerificationContext
from .registry import CheckRegistry
from .report import CheckReport, rebuild_morphisms
from .suites import frobenius_theory
from .suites.frobenius_theory import factor_failure, split_failure
from .suites.pseudotriangulation import octahedron_ext_failure, octahedron_failure, ltr3_failure, rtr3_failure
from .suites.triangulated import (backend_comparison_failure, distinguished_failure, fill_in_failure,
                                  quasi_inverse_failure, shift_functor_failure, shift_lift_failure,
                                  stable_octahedron_failure)

Maps = Dict[str, ModuleMorphism]


def _ac(decide: Callable) -> Callable[[Backend, Maps], bool]:
    def replay_ac(backend: Backend, maps: Maps) -> bool:
        ext = backend.make_extension(maps["f"], Side.FROM_MONIC, validate=False)
        ext2 = backend.make_extension(maps["f2"], Side.FROM_MONIC, validate=False)
        return decide(backend, ext, ext2) is not None
    return replay_ac


def _psi(backend: Backend, maps: Maps) -> bool:
    c, a = maps["c"].source, maps["a"].source
    others = [c, a]
    if "x" in maps:
        others.append(maps["x"].target)
    if "y" in maps:
        others.append(maps["y"].source)
    return psi_failure(backend, c, a, others) is not None


BACKEND_VALIDATORS: Dict[str, Callable[[Backend, Maps], bool]] = {
    "in_right": lambda b, m: not b.in_right(RightTriangle(m["f"], m["g"], m["h"])),
    "in_left": lambda b, m: not b.in_left(LeftTriangle(m["e"], m["f"], m["g"])),
    "rtr3": lambda b, m: rtr3_failure(b, m["f"], m["f2"], m["a"], m["b"]) is not None,
    "ltr3": lambda b, m: ltr3_failure(b, m["g"], m["g2"], m["b"], m["c"]) is not None,
    "octahedron": lambda b, m: octahedron_failure(b, m["l"], m["m"]) is not None,
    "octahedron_ext": lambda b, m: octahedron_ext_failure(b, m["l"], m["m"]) is not None,
    "g1": lambda b, m: g1_failure(b, m["g"]) is not None,
    "g2": lambda b, m: g2_failure(b, m["f"]) is not None,
    "ac1": _ac(ac1_failure),
    "ac2": _ac(ac2_failure),
    "exact_right": lambda b, m: exactness_failure(b, b.complete_right(m["f"]), m["e"].source) is not None,
    "exact_left": lambda b, m: left_exactness_failure(b, b.complete_left(m["g"]), m["e"].source) is not None,
    "psi": _psi,
    "split": lambda b, m: split_failure(b, m["f"], m["g"]) is not None,
    "factor": lambda b, m: factor_failure(b, m["l"], m["m"]) is not None,
}

STABLE_VALIDATORS: Dict[str, Callable[[StableCategory, Maps], bool]] = {
    "distinguished": lambda s, m: distinguished_failure(s, m["f"], m["g"], m["h"]) is not None,
    "fill_in": lambda s, m: fill_in_failure(s, m["f"], m["f2"], m["x"], m["y"]) is not None,
    "stable_octahedron": lambda s, m: any(stable_octahedron_failure(s, m["l"], m["m"], perturb)
                                          for perturb in (False, True)),
    "shift_lift": lambda s, m: shift_lift_failure(s, m["f"], m["lift"]) is not None,
    "shift_functor": lambda s, m: shift_functor_failure(s, m["f"], m["g"]) is not None,
    "quasi_inverse": lambda s, m: quasi_inverse_failure(s, m["f"]) is not None,
    "backend_comparison": lambda s, m: backend_comparison_failure(s, m["f"]) is not None,
}


def _replay_triple(report: CheckReport, context: VerificationContext) -> bool:
    name = report.witness["triple"]
    narrowed = replace(context,
                       triples=[t for t in context.triples if t.label == name],
                       chains=[c for c in context.chains if f"{c[0].label} (D <= {c[1].label})" == name])
    registry = CheckRegistry()
    registry.register_from_module(frobenius_theory)
    check = registry.get(report.check_id)
    if check is None:
        raise ContractError(f"no check {report.check_id} to replay")
    return check(narrowed).status == "fail"


def replay(report: CheckReport, backend: Backend, stable: Optional[StableCategory] = None,
           context: Optional[VerificationContext] = None) -> bool:
    """True when the witness of a fail report still violates its statement."""
    if report.status != "fail":
        raise ContractError(f"only fail reports carry a witness ({report.check_id} is {report.status})")
    validator = report.witness.get("validator")
    if "triple" in report.witness:
        if context is None:
            raise ContractError(f"{report.check_id}: replaying a triple-level witness needs the workspace context")
        reproduced = _replay_triple(report, context)
    elif validator in BACKEND_VALIDATORS:
        maps = rebuild_morphisms(report.witness, backend.algebra)
        reproduced = BACKEND_VALIDATORS[validator](backend, maps)
    elif validator in STABLE_VALIDATORS:
        if stable is None:
            raise ContractError(f"{report.check_id}: validator {validator} needs the stable category")
        maps = rebuild_morphisms(report.witness, backend.algebra)
        reproduced = STABLE_VALIDATORS[validator](stable, maps)
    else:
        raise ContractError(f"{report.check_id}: witness validator {validator!r} is not replayable",
                            validator=validator)
    logger.info(f"replay of {report.check_id} ({validator}): {'reproduced' if reproduced else 'not reproduced'}")
    return reproduced
