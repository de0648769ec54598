"""
One function per subcommand. Each takes the resolved workspace and the
parsed arguments and returns a CommandResult; rendering and exit codes are
left to the app.
"""
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Callable, Dict, List, Optional, Sequence

from loguru import logger

from algebra.category import LinearCategory, ModuleCategory
from algebra.decompose import decompose
from algebra.ext import ext1
from algebra.module import Module, ModuleMorphism
from errors import ContractError
from frobenius.checks import check_frobenius, mutation_pair_check
from frobenius.octahedron import octahedron_stable, prepare_octahedron, stable_octahedron_identities
from frobenius.stable import StableCategory
from frobenius.triple import FrobeniusTriple
from pseudotri.stable import StableBackend
from session import VerificationSession
from verifier.context import VerificationContext
from verifier.faults import FAULTS
from verifier.report import CheckReport, exit_status
from verifier.suites import verify_frobenius_theory, verify_pseudotriangulation, verify_tr_suite
from .morphisms import format_morphism, parse_morphism
from .workspace import Workspace


@dataclass
class CommandResult:
    payload: Dict[str, Any] = dataclass_field(default_factory=dict)
    reports: Optional[List[CheckReport]] = None
    status: int = 0

    @classmethod
    def from_reports(cls, reports: List[CheckReport], **payload: Any) -> "CommandResult":
        return cls(payload=payload, reports=reports, status=exit_status(reports))


def _modules_over(ws: Workspace, algebra) -> Dict[str, Module]:
    return {name: m for name, m in ws.modules.items() if m.algebra is algebra}


def _triple(ws: Workspace, args) -> FrobeniusTriple:
    triple = ws.triple(getattr(args, "triple", None))
    name = getattr(args, "subcategory", None)
    if name:
        triple = triple.with_d(ws.subcategory(name), label=f"{triple.label}[D={name}]")
    return triple


def _stable(ws: Workspace, args) -> StableCategory:
    """The stable category the command works in: --triple, else a stable --backend, else the first triple."""
    if getattr(args, "triple", None) or (ws.triples and not getattr(args, "backend", None)):
        triple = _triple(ws, args)
        key = ("stable", triple.label)
        if key not in ws.cache:
            ws.cache[key] = StableCategory(triple, label=f"{triple.label}/I_D")
        return ws.cache[key]
    backend = ws.backend(getattr(args, "backend", None))
    if not isinstance(backend, StableBackend):
        raise ContractError("no stable category: give --triple or a stable --backend")
    return backend.base


def _iso_class(category: LinearCategory, x: Module, candidates: Sequence[Module]) -> Optional[str]:
    if category.is_zero_object(x):
        return "0"
    for c in candidates:
        if c.dim and category.find_iso(x, c).found:
            return c.label()
    return None


def _candidates(ws: Workspace, category: StableCategory) -> List[Module]:
    return list(_modules_over(ws, category.backend.algebra).values())


def _object_payload(category: LinearCategory, x: Module, candidates: Sequence[Module]) -> Dict[str, Any]:
    return {"name": x.label(), "dim": x.dim, "iso_class": _iso_class(category, x, candidates)}


def cmd_validate(ws: Workspace, args) -> CommandResult:
    """Everything is validated on load; report what was declared."""
    return CommandResult(payload={
        "workspace": ws.name,
        "characteristic": ws.field.p,
        "algebras": sorted(ws.algebras),
        "modules": sorted(ws.modules),
        "backends": sorted(ws.backends),
        "subcategories": sorted(ws.subcategories),
        "triples": sorted(ws.triples),
        "chains": [f"{t.label}: {t.d.label} <= {larger.label}" for t, larger in ws.chains],
    })


def cmd_hom(ws: Workspace, args) -> CommandResult:
    source, target = ws.module(args.source), ws.module(args.target)
    backend = ws.backend(args.backend)
    modules = ModuleCategory(ws.field, ws.budget, ws.seed)
    basis = backend.category.quotient_hom(source, target).reduced
    return CommandResult(payload={
        "source": source.label(), "target": target.label(), "backend": backend.describe(),
        "hom_dim": modules.hom_dim(source, target),
        "dim": len(basis),
        "basis": [b.matrix.tolist() for b in basis],
    })


def cmd_decompose(ws: Workspace, args) -> CommandResult:
    x = ws.module(args.object)
    result = decompose(x, ws.seed, ws.budget)
    modules = ModuleCategory(ws.field, ws.budget, ws.seed)
    candidates = list(_modules_over(ws, x.algebra).values())
    summands = [_object_payload(modules, s.module, candidates) for s in result.summands]
    return CommandResult(payload={"object": x.label(), "status": result.status, "summands": summands},
                         status=0 if result.complete else 2)


def cmd_ext1(ws: Workspace, args) -> CommandResult:
    z, x = ws.module(args.source), ws.module(args.target)
    group = ext1(z, x)
    middles = []
    for k in range(group.dim):
        coeffs = [1 if j == k else 0 for j in range(group.dim)]
        middles.append(group.realize(coeffs).middle.dim)
    return CommandResult(payload={"source": z.label(), "target": x.label(), "dim": group.dim,
                                  "basis_middle_dims": middles})


def cmd_stable_hom(ws: Workspace, args) -> CommandResult:
    category = _stable(ws, args)
    source, target = ws.module(args.source), ws.module(args.target)
    q = category.quotient_hom(source, target)
    return CommandResult(payload={"category": category.label, "source": source.label(), "target": target.label(),
                                  "dim": q.dim, "basis": [b.matrix.tolist() for b in q.reduced]})


def cmd_shift(ws: Workspace, args) -> CommandResult:
    category = _stable(ws, args)
    x = ws.module(args.object)
    shifted = category.shift_object(x) if args.direction == "S" else category.coshift_object(x)
    return CommandResult(payload={"category": category.label, "object": x.label(), "direction": args.direction,
                                  "result": _object_payload(category, shifted, _candidates(ws, category))})


def _morphism(ws: Workspace, category: LinearCategory, text: str) -> ModuleMorphism:
    return parse_morphism(text, category, _modules_over(ws, category.backend.algebra))


def _triangle_payload(category: StableCategory, t) -> Dict[str, Any]:
    return {"f": format_morphism(t.f, category), "g": format_morphism(t.g, category),
            "h": format_morphism(t.h, category)}


def cmd_cone(ws: Workspace, args) -> CommandResult:
    category = _stable(ws, args)
    f = _morphism(ws, category, args.morphism)
    triangle = category.cone(f)
    result = category.is_distinguished(triangle)
    return CommandResult(payload={"category": category.label,
                                  "cone": _object_payload(category, triangle.z, _candidates(ws, category)),
                                  "triangle": _triangle_payload(category, triangle),
                                  "distinguished": result.ok, "witness": triangle.witness.to_payload()},
                         status=0 if result.ok else 1)


def cmd_rotate(ws: Workspace, args) -> CommandResult:
    category = _stable(ws, args)
    f = _morphism(ws, category, args.morphism)
    rotated = category.rotate(category.cone(f))
    result = category.is_distinguished(rotated)
    return CommandResult(payload={"category": category.label, "triangle": _triangle_payload(category, rotated),
                                  "distinguished": result.ok, "reason": result.reason},
                         status=0 if result.ok else 1)


def cmd_fill_in(ws: Workspace, args) -> CommandResult:
    category = _stable(ws, args)
    f, f2 = _morphism(ws, category, args.first), _morphism(ws, category, args.second)
    x, y = _morphism(ws, category, args.x), _morphism(ws, category, args.y)
    t, t2 = category.cone(f), category.cone(f2)
    z, witness = category.fill_in(t, t2, x, y)
    return CommandResult(payload={"category": category.label, "z": format_morphism(z, category),
                                  "witness": witness.to_payload()})


def cmd_octahedron(ws: Workspace, args) -> CommandResult:
    category = _stable(ws, args)
    l, m = _morphism(ws, category, args.first), _morphism(ws, category, args.second)
    t_f, t_l, t_lp = prepare_octahedron(category, l, m, perturb=args.perturb)
    found = octahedron_stable(category, t_f, t_l, t_lp)
    failed = stable_octahedron_identities(category, t_f, t_l, t_lp, found.g_prime, found.q_prime)
    distinguished = category.is_distinguished(found.triangle)
    ok = failed is None and distinguished.ok
    return CommandResult(payload={"category": category.label, "path": found.path,
                                  "triangle": _triangle_payload(category, found.triangle),
                                  "identities": "pass" if failed is None else failed,
                                  "distinguished": distinguished.ok, "witness": found.witness.to_payload()},
                         status=0 if ok else 1)


def cmd_frobenius_check(ws: Workspace, args) -> CommandResult:
    report = check_frobenius(_triple(ws, args))
    return CommandResult(payload=report.to_payload(),
                         status={"pass": 0, "fail": 1, "inconclusive": 2}[report.status])


def cmd_mutation_check(ws: Workspace, args) -> CommandResult:
    report = mutation_pair_check(_triple(ws, args))
    return CommandResult(payload=report.to_payload(),
                         status={"pass": 0, "fail": 1, "inconclusive": 2}[report.status])


def cmd_verify_axioms(ws: Workspace, args) -> CommandResult:
    name = args.backend or next(iter(ws.backends), None)
    backend = ws.backend(name)
    inventory = ws.inventories[name]
    if args.fault:
        if not isinstance(backend, StableBackend):
            raise ContractError("fault injection needs a stable backend")
        backend = FAULTS[args.fault](backend.algebra, inventory, ws.budget, ws.seed)
        logger.warning(f"running the axioms against {backend.describe()}")
    triples = [t for t in ws.triples.values() if t.backend is backend]
    chains = [c for c in ws.chains if c[0].backend is backend]
    with VerificationSession("verify-axioms") as session:
        session.extend(verify_pseudotriangulation(backend, inventory, label=name, session_id=session.session_id))
        context = VerificationContext(backend=backend, inventory=inventory, label=name, triples=triples,
                                      chains=chains)
        session.extend(verify_frobenius_theory(context, session_id=session.session_id))
    return CommandResult.from_reports(session.reports, backend=backend.describe())


def cmd_verify_tr(ws: Workspace, args) -> CommandResult:
    triple = _triple(ws, args)
    with VerificationSession("verify-tr") as session:
        session.extend(verify_tr_suite(triple, label=triple.label, session_id=session.session_id))
    return CommandResult.from_reports(session.reports, triple=triple.label)


COMMANDS: Dict[str, Callable[[Workspace, Any], CommandResult]] = {
    "validate": cmd_validate,
    "hom": cmd_hom,
    "decompose": cmd_decompose,
    "ext1": cmd_ext1,
    "stable-hom": cmd_stable_hom,
    "shift": cmd_shift,
    "cone": cmd_cone,
    "rotate": cmd_rotate,
    "fill-in": cmd_fill_in,
    "octahedron": cmd_octahedron,
    "frobenius-check": cmd_frobenius_check,
    "mutation-check": cmd_mutation_check,
    "verify-axioms": cmd_verify_axioms,
    "verify-tr": cmd_verify_tr,
}
