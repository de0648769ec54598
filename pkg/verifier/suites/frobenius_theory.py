"""
Statements about Frobenius triples checked on the declared workspace data:
split extensions, Sigma-epic propagation, extension closure, the
Frobenius conditions, the minimum D, chains D <= D', (DS) and the
mutation-pair comparison.
"""
import sys
from typing import Any, Callable, List, Optional, Tuple

from algebra.module import ModuleMorphism
from errors import InconclusiveError
from frobenius.checks import check_chain, check_frobenius, labels, minimal_d, mutation_pair_check
from frobenius.subcategory import SubcategorySpec, is_extension_closed
from frobenius.triple import FrobeniusTriple
from pseudotri.base import Backend
from pseudotri.gluing import guarded
from pseudotri.instances import Sweep, composable_pairs, object_pairs
from ..context import VerificationContext, report_from_sweep
from ..decorator import check
from ..registry import CheckRegistry
from ..report import CheckReport, witness_payload

FAMILY = "frobenius"

# (status, message) for one triple
Outcome = Tuple[str, str]


def _name(item: Any) -> str:
    if isinstance(item, FrobeniusTriple):
        return item.label
    triple, larger = item
    return f"{triple.label} (D <= {larger.label})"


def split_failure(backend: Backend, f: ModuleMorphism, g: ModuleMorphism) -> Optional[str]:
    """The biproduct A -> A + B -> B, fed as its injection and projection, is an extension."""
    ext = backend.biproduct_extension(f.source, g.target)
    result = backend.validate_extension(ext)
    return None if result else result.reason


def factor_failure(backend: Backend, l: ModuleMorphism, m: ModuleMorphism) -> Optional[str]:
    """m l Sigma-epic forces m Sigma-epic; m l Omega-monic forces l Omega-monic."""
    composite = backend.epic_monic_test(m @ l)
    if composite[0] and not backend.epic_monic_test(m)[0]:
        return "m l is Sigma-epic but m is not"
    if composite[1] and not backend.epic_monic_test(l)[1]:
        return "m l is Omega-monic but l is not"
    return None


def _per_triple(check_id: str, context: VerificationContext, decide: Callable[[Any], Outcome],
                items: Optional[List[Any]] = None) -> CheckReport:
    """Runs ``decide`` on every declared triple, or on ``items`` (triple, larger D) chains."""
    items = context.triples if items is None else items
    if not items:
        return CheckReport(check_id=check_id, family=FAMILY, status="pass", message="nothing declared")
    outcomes = [(_name(item), *decide(item)) for item in items]
    for name, status, message in outcomes:
        if status == "fail":
            witness = witness_payload(check_id.lower())
            witness["triple"] = name
            return CheckReport(check_id=check_id, family=FAMILY, status="fail", tested=len(outcomes),
                               message=f"{name}: {message}", witness=witness)
    undecided = [f"{name}: {message}" for name, status, message in outcomes if status == "inconclusive"]
    if undecided:
        return CheckReport(check_id=check_id, family=FAMILY, status="inconclusive", tested=len(outcomes),
                           message="; ".join(undecided), budget=context.budget.accounting())
    return CheckReport(check_id=check_id, family=FAMILY, status="pass", tested=len(outcomes),
                       message="; ".join(f"{name}: {message}" for name, _, message in outcomes))


@check(check_id="SPLIT-EXT", family=FAMILY)
def split_extensions(context: VerificationContext) -> CheckReport:
    """A -> A + B -> B with zero connecting maps is an extension for every pair of objects."""
    backend = context.backend
    sweep = Sweep("SPLIT-EXT")

    def step():
        for a, b in object_pairs(context.inventory):
            sweep.tested += 1
            ext = backend.biproduct_extension(a, b)
            failed = split_failure(backend, ext.f, ext.g)
            if failed:
                sweep.fail(f"{a.label()} + {b.label()}: {failed}", "split", f=ext.f, g=ext.g)
    guarded(sweep, step)
    return report_from_sweep("SPLIT-EXT", FAMILY, sweep, context)


@check(check_id="SIGMA-EPIC-FACTOR", family=FAMILY)
def sigma_epic_factor(context: VerificationContext) -> CheckReport:
    """A left factor of a Sigma-epic is Sigma-epic, a right factor of an Omega-monic is Omega-monic."""
    backend = context.backend
    sweep = Sweep("SIGMA-EPIC-FACTOR")

    def step():
        for l, m in composable_pairs(backend.category, context.inventory):
            sweep.tested += 1
            failed = factor_failure(backend, l, m)
            if failed:
                sweep.fail(failed, "factor", l=l, m=m)
    guarded(sweep, step)
    return report_from_sweep("SIGMA-EPIC-FACTOR", FAMILY, sweep, context)


@check(check_id="EXT-CLOSED", family=FAMILY)
def extension_closed(context: VerificationContext) -> CheckReport:
    """Middle terms of extensions between objects of Z lie in Z."""
    def decide(triple: FrobeniusTriple) -> Outcome:
        result = is_extension_closed(triple.z)
        return result.status, result.message or f"{result.tested} extensions"
    return _per_triple("EXT-CLOSED", context, decide)


@check(check_id="FROBENIUS", family=FAMILY)
def frobenius(context: VerificationContext) -> CheckReport:
    """Enough relative injectives and projectives, I_D = P_D, and I_D = I n D."""
    def decide(triple: FrobeniusTriple) -> Outcome:
        report = check_frobenius(triple)
        if not report.frobenius:
            return "fail", "; ".join(report.missing) or "I_D != P_D"
        if not report.intersection_ok:
            return "fail", "I_D differs from the injectives of Z lying in D"
        if report.undecided:
            return "inconclusive", "membership undecided: " + "; ".join(report.undecided)
        return "pass", f"I_D = add({', '.join(report.injectives)})"
    return _per_triple("FROBENIUS", context, decide)


@check(check_id="MINIMAL-D", family=FAMILY)
def minimal(context: VerificationContext) -> CheckReport:
    """For a Frobenius triple, add(I_Z) is contained in D and is itself a Frobenius choice of D."""
    def decide(triple: FrobeniusTriple) -> Outcome:
        report = check_frobenius(triple)
        if not report.frobenius:
            return "pass", "not Frobenius, nothing to minimise"
        try:
            smallest = minimal_d(triple)
        except InconclusiveError as exc:
            return "inconclusive", exc.message
        if smallest is None:
            return "fail", "Z is not Frobenius over D = Z"
        statuses = {m.label(): triple.d.contains(m).status for m in smallest}
        missing = [name for name, status in statuses.items() if status == "no"]
        if missing:
            return "fail", f"injectives of Z outside D: {missing}"
        open_d = [name for name, status in statuses.items() if status == "inconclusive"]
        if open_d:
            return "inconclusive", f"membership in {triple.d.label} undecided for {open_d}"
        spec = SubcategorySpec(triple.backend, smallest, label=f"I({triple.z.label})")
        least = triple.with_d(spec, label=f"{triple.label}[D=I]")
        least_report = check_frobenius(least)
        if not least_report.frobenius:
            return "fail", "D = add(I) is not a Frobenius choice"
        if least_report.undecided:
            return "inconclusive", "; ".join(least_report.undecided)
        return "pass", f"minimal D = add({', '.join(labels(smallest))})"
    return _per_triple("MINIMAL-D", context, decide)


@check(check_id="INJ-CHAIN", family=FAMILY)
def injectives_chain(context: VerificationContext) -> CheckReport:
    """For D <= D' with enough D-injectives, I_D' = I_D."""
    def decide(chain) -> Outcome:
        report = check_chain(*chain)
        if report.injectives_agree is False:
            return "fail", f"I_D = {report.smaller_injectives} but I_D' = {report.larger_injectives}"
        if report.undecided:
            return "inconclusive", "; ".join(report.undecided)
        if report.injectives_agree is None:
            return "pass", f"{report.smaller}: not enough injectives, nothing to compare"
        return "pass", f"I_D = I_D' = {report.smaller_injectives}"
    return _per_triple("INJ-CHAIN", context, decide, context.chains)


@check(check_id="FROB-MONOTONE", family=FAMILY)
def frobenius_monotone(context: VerificationContext) -> CheckReport:
    """(C, Z, D) Frobenius and D <= D' give (C, Z, D') Frobenius."""
    def decide(chain) -> Outcome:
        report = check_chain(*chain)
        if report.monotone is False:
            return "fail", f"Frobenius over {report.smaller} but not over {report.larger}"
        if report.undecided:
            return "inconclusive", "; ".join(report.undecided)
        if report.monotone is None:
            return "pass", f"not Frobenius over {report.smaller}"
        return "pass", f"Frobenius over {report.smaller} and {report.larger}"
    return _per_triple("FROB-MONOTONE", context, decide, context.chains)


@check(check_id="DS", family=FAMILY)
def direct_summands(context: VerificationContext) -> CheckReport:
    """D is closed under direct summands of sums of its objects."""
    def decide(triple: FrobeniusTriple) -> Outcome:
        report = triple.check_summands()
        readings = f"summands in D: {report.in_d}, summands in Z: {report.in_z}"
        if report.status == "fail":
            return "fail", f"{'; '.join(report.witness)} ({readings})"
        return report.status, f"{report.tested} sums ({readings})"
    return _per_triple("DS", context, decide)


@check(check_id="MUTATION-PAIR", family=FAMILY)
def mutation_pair(context: VerificationContext) -> CheckReport:
    """In a triangulated backend: Frobenius plus the hom conditions iff (Z, Z) is a D-mutation pair."""
    if context.backend.kind != "stable":
        return CheckReport(check_id="MUTATION-PAIR", family=FAMILY, status="pass",
                           message="not applicable: backend is not triangulated")

    def decide(triple: FrobeniusTriple) -> Outcome:
        report = mutation_pair_check(triple)
        if report.status == "inconclusive":
            return "inconclusive", "; ".join(report.undecided)
        if report.status == "fail":
            return "fail", "; ".join(report.witnesses) or "the two sides disagree"
        return "pass", f"frobenius+hom = {report.frobenius and report.hom_conditions}, " \
                       f"mutation pair = {report.mutation_pair}"
    return _per_triple("MUTATION-PAIR", context, decide)


def verify_frobenius_theory(context: VerificationContext, session_id: str = None) -> List[CheckReport]:
    registry = CheckRegistry(session_id)
    registry.register_from_module(sys.modules[__name__])
    return registry.run(context)
