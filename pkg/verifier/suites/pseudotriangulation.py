"""
Axioms of a pseudo-triangulation: (RTR1)-(RTR4), (LTR1)-(LTR4), the
gluing and factorization conditions, hom-exactness and the adjunction psi.

(RTR4) and (LTR4) are exercised through octahedral completions; the left
form is checked through the extension form of the octahedron, whose output
must validate as an extension.
"""
import math
import sys
from typing import List, Optional

from algebra.category import Constraint, Term, Unknown
from algebra.module import Module, ModuleMorphism
from errors import InternalConsistencyError
from pseudotri.base import Backend, Side
from pseudotri.gluing import (exactness_failure, guarded, left_exactness_failure, psi_failure, sweep_ac1,
                              sweep_ac2, sweep_g1, sweep_g2)
from pseudotri.instances import Sweep, composable_pairs, morphisms, object_pairs
from pseudotri.octahedron import octahedron_ext, octahedron_right
from pseudotri.triangles import LeftTriangle, RightTriangle
from ..context import VerificationContext, report_from_sweep
from ..decorator import check
from ..registry import CheckRegistry
from ..report import CheckReport

FAMILY = "pseudotriangulation"


def rtr3_failure(backend: Backend, f: ModuleMorphism, f2: ModuleMorphism, a: ModuleMorphism,
                 b: ModuleMorphism) -> Optional[str]:
    t, t2 = backend.complete_right(f), backend.complete_right(f2)
    c = backend.category.solve_one(Unknown(t.c, t2.c, "c"), [
        Constraint([Term(0, right=t.g)], t2.g @ b, "c g = g' b"),
        Constraint([Term(0, left=t2.h)], backend.sigma_map(a) @ t.h, "h' c = Sigma(a) h"),
    ])
    return None if c is not None else "no c with c g = g' b and h' c = Sigma(a) h"


def ltr3_failure(backend: Backend, g: ModuleMorphism, g2: ModuleMorphism, b: ModuleMorphism,
                 c: ModuleMorphism) -> Optional[str]:
    t, t2 = backend.complete_left(g), backend.complete_left(g2)
    a = backend.category.solve_one(Unknown(t.a, t2.a, "a"), [
        Constraint([Term(0, left=t2.f)], b @ t.f, "f' a = b f"),
        Constraint([Term(0, right=t.e)], t2.e @ backend.omega_map(c), "a e = e' Omega(c)"),
    ])
    return None if a is not None else "no a with f' a = b f and a e = e' Omega(c)"


def octahedron_failure(backend: Backend, l: ModuleMorphism, m: ModuleMorphism) -> Optional[str]:
    t_f = backend.complete_right(m @ l)
    t_l = backend.complete_right(l)
    t_lp = backend.make_extension(m, Side.FROM_EPIC, validate=False).right()
    try:
        octahedron_right(backend, t_f, t_l, t_lp)
    except InternalConsistencyError as exc:
        return exc.message
    return None


def octahedron_ext_failure(backend: Backend, l: ModuleMorphism, m: ModuleMorphism) -> Optional[str]:
    ext_f = backend.make_extension(m @ l, Side.FROM_MONIC, validate=False)
    ext_l = backend.make_extension(l, Side.FROM_MONIC, validate=False)
    ext_lp = backend.make_extension(m, Side.FROM_EPIC, validate=False)
    try:
        octahedron_ext(backend, ext_f, ext_l, ext_lp)
    except InternalConsistencyError as exc:
        return exc.message
    return None


def _first(context: VerificationContext, count: int) -> List[ModuleMorphism]:
    return list(morphisms(context.category, context.inventory, limit=count))


def _octahedron_limit(context: VerificationContext) -> int:
    return max(1, context.budget.max_instances // 4)


@check(check_id="RTR1", family=FAMILY)
def rtr1(context: VerificationContext) -> CheckReport:
    """0 -> A -> A -> Sigma 0 is a right triangle, and every morphism completes to one."""
    backend = context.backend
    sweep = Sweep("RTR1")
    zero = backend.zero_object()

    def step():
        for a in context.inventory:
            sweep.tested += 1
            t = RightTriangle(ModuleMorphism.zero(zero, a), ModuleMorphism.identity(a),
                              ModuleMorphism.zero(a, backend.sigma(zero)))
            result = backend.in_right(t)
            if not result:
                sweep.fail(f"0 -> {a.label()} -> {a.label()} -> Sigma 0: {result.reason}", "in_right",
                           f=t.f, g=t.g, h=t.h)
        for f in morphisms(context.category, context.inventory):
            sweep.tested += 1
            t = backend.complete_right(f)
            result = backend.in_right(t)
            if not result:
                sweep.fail(f"completion of {f.source.label()} -> {f.target.label()}: {result.reason}",
                           "in_right", f=t.f, g=t.g, h=t.h)
    guarded(sweep, step)
    return report_from_sweep("RTR1", FAMILY, sweep, context)


@check(check_id="RTR2", family=FAMILY)
def rtr2(context: VerificationContext) -> CheckReport:
    """Rotating a right triangle gives a right triangle."""
    backend = context.backend
    sweep = Sweep("RTR2")

    def step():
        for f in morphisms(context.category, context.inventory):
            sweep.tested += 1
            rotated = backend.rotate_right(backend.complete_right(f))
            result = backend.in_right(rotated)
            if not result:
                sweep.fail(f"rotation of the completion of {f.source.label()} -> {f.target.label()}: "
                           f"{result.reason}", "in_right", f=rotated.f, g=rotated.g, h=rotated.h)
    guarded(sweep, step)
    return report_from_sweep("RTR2", FAMILY, sweep, context)


@check(check_id="RTR3", family=FAMILY)
def rtr3(context: VerificationContext) -> CheckReport:
    """A commuting square on two right triangles extends to a morphism of triangles."""
    backend = context.backend
    sweep = Sweep("RTR3")
    count = max(1, math.isqrt(context.budget.max_instances))

    def step():
        firsts = _first(context, count)
        for f in firsts:
            for f2 in firsts:
                for a, b in backend.category.commuting_squares(f, f2):
                    sweep.tested += 1
                    failed = rtr3_failure(backend, f, f2, a, b)
                    if failed:
                        sweep.fail(failed, "rtr3", f=f, f2=f2, a=a, b=b)
    guarded(sweep, step)
    return report_from_sweep("RTR3", FAMILY, sweep, context)


@check(check_id="RTR4", family=FAMILY)
def rtr4(context: VerificationContext) -> CheckReport:
    """Octahedral completion for m' l = f with m' Sigma-epic."""
    backend = context.backend
    sweep = Sweep("RTR4")

    def step():
        pairs = composable_pairs(context.category, context.inventory, limit=_octahedron_limit(context),
                                 predicate=lambda l, m: backend.epic_monic_test(m)[0])
        for l, m in pairs:
            sweep.tested += 1
            failed = octahedron_failure(backend, l, m)
            if failed:
                sweep.fail(failed, "octahedron", l=l, m=m)
    guarded(sweep, step)
    return report_from_sweep("RTR4", FAMILY, sweep, context)


@check(check_id="LTR1", family=FAMILY)
def ltr1(context: VerificationContext) -> CheckReport:
    """Omega A -> 0 -> A -> A is a left triangle, and every morphism completes to one."""
    backend = context.backend
    sweep = Sweep("LTR1")
    zero = backend.zero_object()

    def step():
        for a in context.inventory:
            sweep.tested += 1
            t = LeftTriangle(ModuleMorphism.zero(backend.omega(a), zero), ModuleMorphism.zero(zero, a),
                             ModuleMorphism.identity(a))
            result = backend.in_left(t)
            if not result:
                sweep.fail(f"Omega {a.label()} -> 0 -> {a.label()} -> {a.label()}: {result.reason}", "in_left",
                           e=t.e, f=t.f, g=t.g)
        for g in morphisms(context.category, context.inventory):
            sweep.tested += 1
            t = backend.complete_left(g)
            result = backend.in_left(t)
            if not result:
                sweep.fail(f"completion of {g.source.label()} -> {g.target.label()}: {result.reason}",
                           "in_left", e=t.e, f=t.f, g=t.g)
    guarded(sweep, step)
    return report_from_sweep("LTR1", FAMILY, sweep, context)


@check(check_id="LTR2", family=FAMILY)
def ltr2(context: VerificationContext) -> CheckReport:
    """Rotating a left triangle gives a left triangle."""
    backend = context.backend
    sweep = Sweep("LTR2")

    def step():
        for g in morphisms(context.category, context.inventory):
            sweep.tested += 1
            rotated = backend.rotate_left(backend.complete_left(g))
            result = backend.in_left(rotated)
            if not result:
                sweep.fail(f"rotation of the completion of {g.source.label()} -> {g.target.label()}: "
                           f"{result.reason}", "in_left", e=rotated.e, f=rotated.f, g=rotated.g)
    guarded(sweep, step)
    return report_from_sweep("LTR2", FAMILY, sweep, context)


@check(check_id="LTR3", family=FAMILY)
def ltr3(context: VerificationContext) -> CheckReport:
    """A commuting square on two left triangles extends to a morphism of triangles."""
    backend = context.backend
    sweep = Sweep("LTR3")
    count = max(1, math.isqrt(context.budget.max_instances))

    def step():
        firsts = _first(context, count)
        for g in firsts:
            for g2 in firsts:
                for b, c in backend.category.commuting_squares(g, g2):
                    sweep.tested += 1
                    failed = ltr3_failure(backend, g, g2, b, c)
                    if failed:
                        sweep.fail(failed, "ltr3", g=g, g2=g2, b=b, c=c)
    guarded(sweep, step)
    return report_from_sweep("LTR3", FAMILY, sweep, context)


@check(check_id="LTR4", family=FAMILY)
def ltr4(context: VerificationContext) -> CheckReport:
    """Octahedral completion in extension form: the completed triangle is also a left triangle."""
    backend = context.backend
    sweep = Sweep("LTR4")

    def usable(l: ModuleMorphism, m: ModuleMorphism) -> bool:
        return (backend.epic_monic_test(l)[1] and backend.epic_monic_test(m)[0]
                and backend.epic_monic_test(m @ l)[1])

    def step():
        for l, m in composable_pairs(context.category, context.inventory, limit=_octahedron_limit(context),
                                     predicate=usable):
            sweep.tested += 1
            failed = octahedron_ext_failure(backend, l, m)
            if failed:
                sweep.fail(failed, "octahedron_ext", l=l, m=m)
    guarded(sweep, step)
    return report_from_sweep("LTR4", FAMILY, sweep, context)


@check(check_id="G1", family=FAMILY)
def g1(context: VerificationContext) -> CheckReport:
    """A Sigma-epic morphism is the cokernel of its kernel."""
    return report_from_sweep("G1", FAMILY, sweep_g1(context.backend, context.inventory), context)


@check(check_id="G2", family=FAMILY)
def g2(context: VerificationContext) -> CheckReport:
    """An Omega-monic morphism is the kernel of its cokernel."""
    return report_from_sweep("G2", FAMILY, sweep_g2(context.backend, context.inventory), context)


@check(check_id="AC1", family=FAMILY)
def ac1(context: VerificationContext) -> CheckReport:
    """c with h' c = 0 and c g = 0 factors through g'."""
    return report_from_sweep("AC1", FAMILY, sweep_ac1(context.backend, context.inventory), context)


@check(check_id="AC2", family=FAMILY)
def ac2(context: VerificationContext) -> CheckReport:
    """a with f' a = 0 and a e = 0 extends along f."""
    return report_from_sweep("AC2", FAMILY, sweep_ac2(context.backend, context.inventory), context)


@check(check_id="EXACT-RIGHT", family=FAMILY)
def exact_right(context: VerificationContext) -> CheckReport:
    """Right triangles give exact sequences of C(-, E)."""
    backend = context.backend
    sweep = Sweep("EXACT-RIGHT")

    def step():
        for f in morphisms(context.category, context.inventory):
            t = backend.complete_right(f)
            for e in context.inventory:
                sweep.tested += 1
                failed = exactness_failure(backend, t, e)
                if failed:
                    sweep.fail(failed, "exact_right", f=f, e=ModuleMorphism.identity(e))
    guarded(sweep, step)
    return report_from_sweep("EXACT-RIGHT", FAMILY, sweep, context)


@check(check_id="EXACT-LEFT", family=FAMILY)
def exact_left(context: VerificationContext) -> CheckReport:
    """Left triangles give exact sequences of C(E, -)."""
    backend = context.backend
    sweep = Sweep("EXACT-LEFT")

    def step():
        for g in morphisms(context.category, context.inventory):
            t = backend.complete_left(g)
            for e in context.inventory:
                sweep.tested += 1
                failed = left_exactness_failure(backend, t, e)
                if failed:
                    sweep.fail(failed, "exact_left", g=g, e=ModuleMorphism.identity(e))
    guarded(sweep, step)
    return report_from_sweep("EXACT-LEFT", FAMILY, sweep, context)


@check(check_id="PSI", family=FAMILY)
def psi(context: VerificationContext) -> CheckReport:
    """psi: C(Omega c, a) -> C(c, Sigma a) is bijective and natural in both arguments."""
    backend = context.backend
    sweep = Sweep("PSI")

    def step():
        for c, a in object_pairs(context.inventory):
            sweep.tested += 1
            failed = psi_failure(backend, c, a, context.inventory)
            if failed:
                maps = {k: v for k, v in failed.items() if isinstance(v, ModuleMorphism)}
                sweep.fail(f"psi on ({c.label()}, {a.label()}): {failed['reason']}", "psi",
                           c=ModuleMorphism.identity(c), a=ModuleMorphism.identity(a), **maps)
    guarded(sweep, step)
    return report_from_sweep("PSI", FAMILY, sweep, context)


def verify_pseudotriangulation(backend: Backend, inventory: List[Module], label: str = "axioms",
                               session_id: str = None) -> List[CheckReport]:
    registry = CheckRegistry(session_id)
    registry.register_from_module(sys.modules[__name__])
    return registry.run(VerificationContext(backend=backend, inventory=list(inventory), label=label))
