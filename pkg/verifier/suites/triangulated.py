"""
(TR1)-(TR4) on the stable category Z/I_D of a Frobenius triple, together
with the statements the proof leans on: the shift is well defined on
stable classes, S and S* are quasi-inverse, and with D = {0} the standard
triangles are the backend's own.
"""
import math
import sys
from typing import List, Optional

from algebra.module import Module, ModuleMorphism
from errors import ContractError, InternalConsistencyError
from frobenius.checks import check_frobenius
from frobenius.octahedron import octahedron_stable, prepare_octahedron, stable_octahedron_identities
from frobenius.stable import StableCategory
from frobenius.triangle import StableTriangle
from frobenius.triple import FrobeniusTriple
from pseudotri.gluing import guarded
from pseudotri.instances import Sweep, composable_pairs, morphisms, object_pairs
from pseudotri.triangles import RightTriangle
from ..context import VerificationContext, report_from_sweep
from ..decorator import check
from ..registry import CheckRegistry
from ..report import CheckReport

FAMILY = "triangulated"


def _basis_morphisms(category: StableCategory, inventory: List[Module]) -> List[ModuleMorphism]:
    return [b for m, n in object_pairs(inventory) for b in category.quotient_hom(m, n).reduced]


def distinguished_failure(category: StableCategory, f: ModuleMorphism, g: ModuleMorphism,
                          h: ModuleMorphism) -> Optional[str]:
    result = category.is_distinguished(StableTriangle(f, g, h))
    return None if result else result.reason


def fill_in_failure(category: StableCategory, f: ModuleMorphism, f2: ModuleMorphism, x: ModuleMorphism,
                    y: ModuleMorphism) -> Optional[str]:
    t, t2 = category.cone(f), category.cone(f2)
    try:
        z, _ = category.fill_in(t, t2, x, y)
    except InternalConsistencyError as exc:
        return exc.message
    if not category.equal(z @ t.g, t2.g @ y):
        return "z g != g' y"
    if not category.equal(t2.h @ z, category.shift_map(x) @ t.h):
        return "h' z != S(x) h"
    return None


def rotation_failure(category: StableCategory, rotated: StableTriangle) -> Optional[str]:
    """Distinguished both through the isomorphism the rotation carries and against the cone of its first map."""
    result = category.is_distinguished(rotated)
    if not result:
        return result.reason
    return distinguished_failure(category, rotated.f, rotated.g, rotated.h)


def stable_octahedron_failure(category: StableCategory, l: ModuleMorphism, m: ModuleMorphism,
                              perturb: bool) -> Optional[str]:
    t_f, t_l, t_lp = prepare_octahedron(category, l, m, perturb=perturb)
    try:
        found = octahedron_stable(category, t_f, t_l, t_lp)
    except InternalConsistencyError as exc:
        return exc.message
    failed = stable_octahedron_identities(category, t_f, t_l, t_lp, found.g_prime, found.q_prime)
    if failed:
        return f"identity {failed} fails ({found.path})"
    result = category.is_distinguished(found.triangle)
    if not result:
        return f"completed triangle is not distinguished: {result.reason}"
    return None


def shift_lift_failure(category: StableCategory, f: ModuleMorphism, lift: ModuleMorphism) -> Optional[str]:
    return None if category.equal(lift, category.shift_map(f)) else "two lifts give different S f"


def shift_functor_failure(category: StableCategory, f: ModuleMorphism, g: ModuleMorphism) -> Optional[str]:
    """S(id) = id, S(f + g) = S f + S g when parallel, S(g f) = S g S f when composable."""
    for x in (f.source, f.target):
        if not category.equal(category.shift_map(category.identity(x)), category.identity(category.shift_object(x))):
            return f"S(id_{x.label()}) != id"
    if f.source.key == g.source.key and f.target.key == g.target.key:
        if not category.equal(category.shift_map(f + g), category.shift_map(f) + category.shift_map(g)):
            return "S(f + g) != S f + S g"
    if f.target.key == g.source.key:
        if not category.equal(category.shift_map(g @ f), category.shift_map(g) @ category.shift_map(f)):
            return "S(g f) != S g S f"
    return None


def quasi_inverse_failure(category: StableCategory, f: ModuleMorphism) -> Optional[str]:
    """Unit and counit at both ends of f are invertible and natural along f."""
    for x in (f.source, f.target):
        if not category.is_iso(category.unit(x)):
            return f"eta_{x.label()}: X -> S S* X is not invertible"
        if not category.is_iso(category.counit(x)):
            return f"theta_{x.label()}: S* S X -> X is not invertible"
    ss_f = category.shift_map(category.coshift_map(f))
    if not category.equal(ss_f @ category.unit(f.source), category.unit(f.target) @ f):
        return "S S*(f) eta_X != eta_Y f"
    ss_f = category.coshift_map(category.shift_map(f))
    if not category.equal(f @ category.counit(f.source), category.counit(f.target) @ ss_f):
        return "f theta_X != theta_Y S* S(f)"
    return None


def backend_comparison_failure(category: StableCategory, f: ModuleMorphism) -> Optional[str]:
    """With I_D = 0: the cone of f, read through gamma_X, is a backend triangle and conversely."""
    backend = category.backend
    pres = category.injective_presentation(f.source)
    cone = category.cone(f)
    in_backend = backend.in_right(RightTriangle(cone.f, cone.g, pres.gamma @ cone.h))
    if not in_backend:
        return f"standard triangle is not a backend triangle: {in_backend.reason}"
    gamma_inv = category.base.find_inverse(pres.gamma)
    if gamma_inv is None:
        return f"gamma_{f.source.label()}: S X -> Sigma X is not invertible"
    own = backend.complete_right(f)
    result = category.is_distinguished(StableTriangle(own.f, own.g, gamma_inv @ own.h))
    return None if result else f"backend triangle is not distinguished: {result.reason}"


@check(check_id="TR1", family=FAMILY)
def tr1(context: VerificationContext) -> CheckReport:
    """X = X -> 0 -> S X is distinguished, and every morphism has a distinguished cone."""
    category = context.stable
    sweep = Sweep("TR1")
    zero = context.backend.zero_object()

    def step():
        for x in context.inventory:
            sweep.tested += 1
            f, g = category.identity(x), ModuleMorphism.zero(x, zero)
            h = ModuleMorphism.zero(zero, category.shift_object(x))
            failed = distinguished_failure(category, f, g, h)
            if failed:
                sweep.fail(f"identity triangle on {x.label()}: {failed}", "distinguished", f=f, g=g, h=h)
        for f in morphisms(category, context.inventory):
            sweep.tested += 1
            cone = category.cone(f)
            result = category.is_distinguished(cone)
            if not result:
                sweep.fail(f"cone of {f.source.label()} -> {f.target.label()}: {result.reason}", "distinguished",
                           f=cone.f, g=cone.g, h=cone.h)
    guarded(sweep, step)
    return report_from_sweep("TR1", FAMILY, sweep, context)


@check(check_id="TR2", family=FAMILY)
def tr2(context: VerificationContext) -> CheckReport:
    """Rotations of distinguished triangles are distinguished, with third map -S f."""
    category = context.stable
    sweep = Sweep("TR2")

    def step():
        for f in morphisms(category, context.inventory):
            sweep.tested += 1
            triangle = category.cone(f)
            for turn in range(3):
                try:
                    rotated = category.rotate(triangle)
                except (ContractError, InternalConsistencyError) as exc:
                    failed = exc.message
                else:
                    failed = rotation_failure(category, rotated)
                if failed:
                    sweep.fail(f"rotation {turn + 1} of the cone of {f.source.label()} -> {f.target.label()}: "
                               f"{failed}", "distinguished", f=triangle.f, g=triangle.g, h=triangle.h)
                    break
                triangle = rotated
    guarded(sweep, step)
    return report_from_sweep("TR2", FAMILY, sweep, context)


@check(check_id="TR3", family=FAMILY)
def tr3(context: VerificationContext) -> CheckReport:
    """Every stably commuting square between standard triangles has a fill-in."""
    category = context.stable
    sweep = Sweep("TR3")
    count = max(1, math.isqrt(context.budget.max_instances))

    def step():
        firsts = list(morphisms(category, context.inventory, limit=count))
        for f in firsts:
            for f2 in firsts:
                for x, y in category.commuting_squares(f, f2):
                    sweep.tested += 1
                    failed = fill_in_failure(category, f, f2, x, y)
                    if failed:
                        sweep.fail(failed, "fill_in", f=f, f2=f2, x=x, y=y)
    guarded(sweep, step)
    return report_from_sweep("TR3", FAMILY, sweep, context)


@check(check_id="TR4", family=FAMILY)
def tr4(context: VerificationContext) -> CheckReport:
    """Octahedra exist for composable pairs, with and without a null perturbation of the composite."""
    category = context.stable
    sweep = Sweep("TR4")
    limit = max(1, context.budget.max_instances // 4)

    def step():
        for index, (l, m) in enumerate(composable_pairs(category, context.inventory, limit=limit)):
            sweep.tested += 1
            failed = stable_octahedron_failure(category, l, m, perturb=bool(index % 2))
            if failed:
                sweep.fail(failed, "stable_octahedron", l=l, m=m)
    guarded(sweep, step)
    return report_from_sweep("TR4", FAMILY, sweep, context)


@check(check_id="SHIFT-WELL-DEFINED", family=FAMILY)
def shift_well_defined(context: VerificationContext) -> CheckReport:
    """Independent lifts give stably equal S f, and S is an additive functor."""
    category = context.stable
    sweep = Sweep("SHIFT-WELL-DEFINED")

    def step():
        basis = _basis_morphisms(category, context.inventory)
        for f in basis:
            for k in range(context.budget.well_definedness_lifts):
                sweep.tested += 1
                lift = category.shift_map(f, rng=category.rng("lift", f.source.label(), f.target.label(), k))
                failed = shift_lift_failure(category, f, lift)
                if failed:
                    sweep.fail(failed, "shift_lift", f=f, lift=lift)
                    break
        for f in basis:
            for g in basis:
                sweep.tested += 1
                failed = shift_functor_failure(category, f, g)
                if failed:
                    sweep.fail(failed, "shift_functor", f=f, g=g)
    guarded(sweep, step)
    return report_from_sweep("SHIFT-WELL-DEFINED", FAMILY, sweep, context)


@check(check_id="QUASI-INVERSE", family=FAMILY)
def quasi_inverse(context: VerificationContext) -> CheckReport:
    """S S* and S* S are naturally isomorphic to the identity."""
    category = context.stable
    sweep = Sweep("QUASI-INVERSE")

    def step():
        for x in context.inventory:
            sweep.tested += 1
            failed = quasi_inverse_failure(category, category.identity(x))
            if failed:
                sweep.fail(failed, "quasi_inverse", f=category.identity(x))
        for f in _basis_morphisms(category, context.inventory):
            sweep.tested += 1
            failed = quasi_inverse_failure(category, f)
            if failed:
                sweep.fail(failed, "quasi_inverse", f=f)
    guarded(sweep, step)
    return report_from_sweep("QUASI-INVERSE", FAMILY, sweep, context)


@check(check_id="CROSS-D0", family=FAMILY)
def cross_d0(context: VerificationContext) -> CheckReport:
    """With D = {0} the distinguished triangles are the backend's right triangles."""
    category = context.stable
    sweep = Sweep("CROSS-D0")
    if not all(category.base.is_zero_object(i) for i in category.injectives):
        return CheckReport(check_id="CROSS-D0", family=FAMILY, status="pass", tested=0,
                           message="not applicable: I_D is non-zero")

    def step():
        for f in morphisms(category, context.inventory):
            sweep.tested += 1
            failed = backend_comparison_failure(category, f)
            if failed:
                sweep.fail(failed, "backend_comparison", f=f)
    guarded(sweep, step)
    return report_from_sweep("CROSS-D0", FAMILY, sweep, context)


def verify_tr_suite(triple: FrobeniusTriple, inventory: Optional[List[Module]] = None, label: str = "tr",
                    session_id: str = None, stable: Optional[StableCategory] = None) -> List[CheckReport]:
    """Checks that the triple is Frobenius, then runs (TR1)-(TR4) on its stable category."""
    inventory = list(triple.z.inventory if inventory is None else inventory)
    report = check_frobenius(triple)
    if not report.frobenius:
        return [CheckReport(check_id="FROBENIUS", family=FAMILY, status="fail", tested=len(triple.z.inventory),
                            message=f"triple {triple.label} is not Frobenius: {'; '.join(report.missing) or 'I_D != P_D'}")]
    if report.undecided:
        return [CheckReport(check_id="FROBENIUS", family=FAMILY, status="inconclusive", tested=len(triple.z.inventory),
                            message=f"triple {triple.label}: membership undecided: {'; '.join(report.undecided)}",
                            budget=triple.backend.budget.accounting())]
    stable = stable or StableCategory(triple, label=f"{triple.label}/I_D")
    registry = CheckRegistry(session_id)
    registry.register_from_module(sys.modules[__name__])
    context = VerificationContext(backend=triple.backend, inventory=inventory, label=label, stable=stable,
                                  triples=[triple])
    return registry.run(context)
