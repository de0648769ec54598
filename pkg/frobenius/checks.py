"""
Frobenius detection for a triple, the minimum D, chains D <= D' and the
mutation-pair comparison in a triangulated backend.
"""
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence

from loguru import logger

from algebra.constructions import column_morphism, direct_sum, row_morphism
from algebra.module import Module, ModuleMorphism
from errors import ContractError, InconclusiveError, NotEnoughInjectivesError, NotEnoughProjectivesError
from pseudotri.triangles import Extension
from .injectives import conflation_family, relative_injectives
from .presentation import injective_presentation, projective_presentation
from .subcategory import SubcategorySpec
from .triple import FrobeniusTriple, SummandReport


def same_objects(category, left: Sequence[Module], right: Sequence[Module]) -> bool:
    """add(left) == add(right), comparing non-zero objects up to isomorphism."""
    left = [m for m in left if not category.is_zero_object(m)]
    right = [m for m in right if not category.is_zero_object(m)]

    def covered(items, by):
        return all(any(category.find_iso(m, n).found for n in by) for m in items)

    return covered(left, right) and covered(right, left)


def labels(objects: Sequence[Module]) -> List[str]:
    return [m.label() for m in objects]


@dataclass
class FrobeniusReport:
    triple: str
    enough_injectives: bool = True
    enough_projectives: bool = True
    injectives_equal_projectives: bool = True
    intersection_ok: bool = True  # I_D == I n D
    injectives: List[str] = dataclass_field(default_factory=list)
    projectives: List[str] = dataclass_field(default_factory=list)
    minimal_d: Optional[List[str]] = None
    missing: List[str] = dataclass_field(default_factory=list)
    conflations: int = 0
    summands: Optional[SummandReport] = None
    undecided: List[str] = dataclass_field(default_factory=list)

    @property
    def frobenius(self) -> bool:
        return self.enough_injectives and self.enough_projectives and self.injectives_equal_projectives

    @property
    def status(self) -> str:
        if not self.frobenius or not self.intersection_ok:
            return "fail"
        if self.undecided:
            return "inconclusive"
        if self.summands is not None and self.summands.status == "inconclusive":
            return "inconclusive"
        return "pass"

    def to_payload(self) -> Dict:
        return {
            "triple": self.triple,
            "frobenius": self.frobenius,
            "enough_injectives": self.enough_injectives,
            "enough_projectives": self.enough_projectives,
            "injectives_equal_projectives": self.injectives_equal_projectives,
            "intersection_ok": self.intersection_ok,
            "injectives": self.injectives,
            "projectives": self.projectives,
            "minimal_d": self.minimal_d,
            "missing": self.missing,
            "conflations": self.conflations,
            "undecided": self.undecided,
            "summands_in_d": None if self.summands is None else self.summands.in_d,
            "summands_in_z": None if self.summands is None else self.summands.in_z,
            "completeness": "relative injectivity tested against the conflations realised on the Z inventory",
        }


def as_whole_z(triple: FrobeniusTriple) -> FrobeniusTriple:
    """(C, Z, Z): its relative injectives are the I of Z itself."""
    d = SubcategorySpec(triple.backend, triple.z.inventory, label=triple.z.label, full=triple.z.full)
    return FrobeniusTriple(triple.backend, triple.z, d, label=f"{triple.label}[D=Z]", check=False)


def minimal_d(triple: FrobeniusTriple, family: Optional[List[Extension]] = None) -> Optional[List[Module]]:
    """
    I of Z when Z is Frobenius (then add(I) is the minimum D), else None.
    Raises InconclusiveError when a membership in Z needed on the way is undecided.
    """
    whole = as_whole_z(triple)
    family = conflation_family(whole) if family is None else family
    found = relative_injectives(whole, family)
    if found.undecided:
        raise InconclusiveError(f"minimal D of {triple.label}: middle terms {found.undecided} undecided",
                                budget=triple.backend.budget.accounting())
    if not same_objects(triple.backend.category, found.injectives, found.projectives):
        return None
    ok, _, _, undecided = presentations_exist(whole, found.injectives, found.projectives)
    if undecided:
        raise InconclusiveError(f"minimal D of {triple.label}: " + "; ".join(undecided),
                                budget=triple.backend.budget.accounting())
    if not ok:
        return None
    return found.injectives


def presentations_exist(triple: FrobeniusTriple, injectives: Sequence[Module],
                        projectives: Sequence[Module]):
    """(all found, objects without an injective one, objects without a projective one, undecided searches)"""
    no_inj, no_proj, undecided = [], [], []
    for x in triple.z.inventory:
        try:
            injective_presentation(triple, x, injectives)
        except NotEnoughInjectivesError:
            no_inj.append(x.label())
        except InconclusiveError as exc:
            undecided.append(exc.message)
        try:
            projective_presentation(triple, x, projectives)
        except NotEnoughProjectivesError:
            no_proj.append(x.label())
        except InconclusiveError as exc:
            undecided.append(exc.message)
    return not no_inj and not no_proj and not undecided, no_inj, no_proj, undecided


def check_frobenius(triple: FrobeniusTriple, family: Optional[List[Extension]] = None,
                    summand_limit: Optional[int] = None) -> FrobeniusReport:
    category = triple.backend.category
    family = conflation_family(triple) if family is None else family
    found = relative_injectives(triple, family)
    report = FrobeniusReport(triple=triple.label, conflations=len(family),
                             injectives=labels(found.injectives), projectives=labels(found.projectives))
    _, no_inj, no_proj, undecided = presentations_exist(triple, found.injectives, found.projectives)
    report.undecided = [f"middle term {name} in {triple.z.label}" for name in found.undecided] + undecided
    report.enough_injectives = not no_inj
    report.enough_projectives = not no_proj
    report.missing = [f"{name}: no inflation into add(I_D)" for name in no_inj]
    report.missing += [f"{name}: no deflation from add(P_D)" for name in no_proj]
    report.injectives_equal_projectives = same_objects(category, found.injectives, found.projectives)

    whole = as_whole_z(triple)
    whole_found = relative_injectives(whole, family)
    in_d, open_d = [], []
    for i in whole_found.injectives:
        membership = triple.d.contains(i)
        if membership.status == "yes":
            in_d.append(i)
        elif membership.status == "inconclusive":
            open_d.append(f"{i.label()} in {triple.d.label}")
    report.undecided += open_d
    if not open_d:
        report.intersection_ok = same_objects(category, found.injectives, in_d)
    if report.frobenius:
        try:
            smallest = minimal_d(triple, family)
        except InconclusiveError as exc:
            report.undecided.append(exc.message)
        else:
            report.minimal_d = None if smallest is None else labels(smallest)
    report.summands = triple.check_summands(summand_limit)
    logger.info(f"triple {triple.label}: frobenius={report.frobenius}, minimal D = {report.minimal_d}")
    return report


@dataclass
class ChainReport:
    """D <= D': I_D' == I_D, and Frobenius passes up the chain."""

    smaller: str
    larger: str
    injectives_agree: Optional[bool]
    monotone: Optional[bool]
    smaller_injectives: List[str] = dataclass_field(default_factory=list)
    larger_injectives: List[str] = dataclass_field(default_factory=list)
    undecided: List[str] = dataclass_field(default_factory=list)

    @property
    def status(self) -> str:
        if self.injectives_agree is False or self.monotone is False:
            return "fail"
        if self.undecided:
            return "inconclusive"
        return "pass"


def check_chain(triple: FrobeniusTriple, larger: SubcategorySpec) -> ChainReport:
    category = triple.backend.category
    for obj in triple.d.inventory:
        if not larger.contains(obj).member:
            raise ContractError(f"chain {triple.d.label} <= {larger.label}: {obj.label()} is missing from {larger.label}")
    bigger = triple.with_d(larger, label=f"{triple.label}[D={larger.label}]")
    family = conflation_family(triple)
    small_found = relative_injectives(triple, family)
    large_found = relative_injectives(bigger, family)
    report = ChainReport(smaller=triple.d.label, larger=larger.label, injectives_agree=None, monotone=None,
                         smaller_injectives=labels(small_found.injectives),
                         larger_injectives=labels(large_found.injectives))
    has_enough, _, _, _ = presentations_exist(triple, small_found.injectives, small_found.projectives)
    if has_enough:
        report.injectives_agree = same_objects(category, small_found.injectives, large_found.injectives)
    small = check_frobenius(triple, family)
    report.undecided = list(small.undecided)
    if small.frobenius:
        big = check_frobenius(bigger, family)
        report.undecided += big.undecided
        report.monotone = big.frobenius
    logger.debug(f"chain {report.smaller} <= {report.larger}: agree={report.injectives_agree}, "
                 f"monotone={report.monotone}")
    return report


@dataclass
class MutationReport:
    triple: str
    hom_conditions: bool  # C(Omega Z, D) = C(D, Sigma Z) = 0
    frobenius: bool
    mutation_pair: bool  # the triangulated-category definition, evaluated directly
    left_approximations: bool
    right_approximations: bool
    shifted_hom_conditions: bool  # C(Z, Sigma D) = C(D, Sigma Z) = 0
    d_is_forced: Optional[bool]
    vacuous: bool
    witnesses: List[str] = dataclass_field(default_factory=list)
    undecided: List[str] = dataclass_field(default_factory=list)

    @property
    def agree(self) -> bool:
        return (self.frobenius and self.hom_conditions) == self.mutation_pair

    @property
    def status(self) -> str:
        if self.undecided:
            return "inconclusive"
        if not self.agree or self.d_is_forced is False:
            return "fail"
        return "pass"

    def to_payload(self) -> Dict:
        return {
            "triple": self.triple,
            "hom_conditions": self.hom_conditions,
            "hom_conditions_vacuous": self.vacuous,
            "frobenius": self.frobenius,
            "mutation_pair": self.mutation_pair,
            "left_approximations": self.left_approximations,
            "right_approximations": self.right_approximations,
            "shifted_hom_conditions": self.shifted_hom_conditions,
            "directions_agree": self.agree,
            "d_is_forced": self.d_is_forced,
            "witnesses": self.witnesses,
            "undecided": self.undecided,
        }


def _killed_by_shifts(backend, z: SubcategorySpec, d: Module, witnesses: Optional[List[str]] = None) -> bool:
    category = backend.category
    ok = True
    for obj in z.inventory:
        if category.hom_dim(backend.omega(obj), d):
            ok = False
            if witnesses is not None:
                basis = category.quotient_hom(backend.omega(obj), d).reduced[0]
                witnesses.append(f"Hom(Omega {obj.label()}, {d.label()}) != 0: {basis.matrix.tolist()}")
        if category.hom_dim(d, backend.sigma(obj)):
            ok = False
            if witnesses is not None:
                basis = category.quotient_hom(d, backend.sigma(obj)).reduced[0]
                witnesses.append(f"Hom({d.label()}, Sigma {obj.label()}) != 0: {basis.matrix.tolist()}")
    return ok


def _approximation(backend, x: Module, d_objects: Sequence[Module], into: bool) -> Optional[ModuleMorphism]:
    """All reduced basis maps x -> d (``into``) or d -> x, assembled into one map."""
    category = backend.category
    parts = []
    for d in d_objects:
        q = category.quotient_hom(x, d) if into else category.quotient_hom(d, x)
        parts.extend((d, b) for b in q.reduced)
    total = direct_sum([d for d, _ in parts], algebra=backend.algebra, name=f"D({x.label()})")
    if not parts:
        return ModuleMorphism.zero(x, total.module) if into else ModuleMorphism.zero(total.module, x)
    if into:
        return column_morphism(total, [b for _, b in parts])
    return row_morphism(total, [b for _, b in parts])


def mutation_pair_check(triple: FrobeniusTriple, report: Optional[FrobeniusReport] = None) -> MutationReport:
    """
    Compares "(C, Z, D) Frobenius with C(Omega Z, D) = C(D, Sigma Z) = 0"
    against "(Z, Z) is a D-mutation pair", both evaluated on the inventories.
    """
    backend = triple.backend
    category = backend.category
    d_objects = [m for m in triple.d.inventory if not category.is_zero_object(m)]
    witnesses: List[str] = []
    hom_ok = all(_killed_by_shifts(backend, triple.z, d, witnesses) for d in d_objects)
    shifted_ok = all(category.hom_dim(z, backend.sigma(d)) == 0 and category.hom_dim(d, backend.sigma(z)) == 0
                     for z in triple.z.inventory for d in d_objects)

    undecided: List[str] = []
    left_ok = True
    for x in triple.z.inventory:
        cone = backend.complete_right(_approximation(backend, x, d_objects, into=True)).c
        status = triple.z.contains(cone).status
        if status == "no":
            left_ok = False
            witnesses.append(f"left D-approximation of {x.label()} has cone outside {triple.z.label}")
        elif status == "inconclusive":
            undecided.append(f"cone of the left D-approximation of {x.label()}")
    right_ok = True
    for x in triple.z.inventory:
        fibre = backend.complete_left(_approximation(backend, x, d_objects, into=False)).a
        status = triple.z.contains(fibre).status
        if status == "no":
            right_ok = False
            witnesses.append(f"right D-approximation of {x.label()} has fibre outside {triple.z.label}")
        elif status == "inconclusive":
            undecided.append(f"fibre of the right D-approximation of {x.label()}")
    mutation = shifted_ok and left_ok and right_ok

    report = report or check_frobenius(triple)
    forced = None
    if mutation:
        killed = [m for m in triple.z.inventory
                  if not category.is_zero_object(m) and _killed_by_shifts(backend, triple.z, m)]
        forced = same_objects(category, killed, d_objects)
        if not forced:
            witnesses.append(f"D differs from the objects of Z killed by both shifts: {labels(killed)}")
    result = MutationReport(triple=triple.label, hom_conditions=hom_ok, frobenius=report.frobenius,
                            mutation_pair=mutation, left_approximations=left_ok, right_approximations=right_ok,
                            shifted_hom_conditions=shifted_ok, d_is_forced=forced, vacuous=not d_objects,
                            witnesses=witnesses, undecided=undecided + report.undecided)
    logger.info(f"mutation check {triple.label}: frobenius+hom={report.frobenius and hom_ok}, "
                f"mutation pair={mutation}")
    return result
