"""
Workspace files: JSON documents declaring the field, algebras, modules,
backends, subcategories, Frobenius triples and chains D <= D'.

The raw document is validated by pydantic models, then resolved into live
objects. Both stages raise WorkspaceError naming the first bad entity.
"""
import json
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, model_validator

from algebra.algebra import Algebra, validate_algebra
from algebra.constructions import regular_module
from algebra.module import Module, validate_module
from algebra.presets import jordan_module, truncated_polynomial_algebra
from config import Budget
from errors import StableCatError, WorkspaceError
from frobenius.subcategory import SubcategorySpec
from frobenius.triple import FrobeniusTriple
from linalg.field import FieldSpec
from pseudotri.abelian import AbelianBackend
from pseudotri.base import Backend
from pseudotri.stable import StableBackend


class AlgebraModel(BaseModel):
    """An algebra given by a preset or by structure constants"""

    name: str = Field(..., description="Name used by modules and backends")

    preset: Optional[str] = Field(default=None, description="'truncated_polynomial' for F_p[x]/(x^n)")

    n: Optional[int] = Field(default=None, ge=1, description="Nilpotency index of the truncated polynomial preset")

    structure_constants: Optional[List[List[List[int]]]] = Field(default=None, description="c[i][j][k]: b_i b_j = sum_k c b_k")

    unit: Optional[List[int]] = Field(default=None, description="Coordinates of 1")

    @model_validator(mode="after")
    def _preset_or_table(self):
        if self.preset is None and (self.structure_constants is None or self.unit is None):
            raise ValueError("give either a preset or structure_constants and unit")
        if self.preset is not None and self.preset != "truncated_polynomial":
            raise ValueError(f"unknown algebra preset '{self.preset}'")
        if self.preset == "truncated_polynomial" and self.n is None:
            raise ValueError("the truncated_polynomial preset needs n")
        return self


class ModuleModel(BaseModel):
    """A module given by a preset or by its action matrices"""

    name: str = Field(..., description="Name used by inventories and morphism arguments")

    algebra: str = Field(..., description="Name of the algebra acting")

    preset: Optional[str] = Field(default=None, description="'jordan', 'regular' or 'zero'")

    k: Optional[int] = Field(default=None, ge=0, description="Size of the Jordan block")

    action: Optional[List[List[List[int]]]] = Field(default=None, description="One d x d matrix per algebra basis element")

    dim: Optional[int] = Field(default=None, ge=0, description="Dimension; needed only when it is 0")

    @model_validator(mode="after")
    def _preset_or_action(self):
        if self.preset is None and self.action is None and self.dim != 0:
            raise ValueError("give either a preset or action matrices")
        if self.preset not in (None, "jordan", "regular", "zero"):
            raise ValueError(f"unknown module preset '{self.preset}'")
        if self.preset == "jordan" and self.k is None:
            raise ValueError("the jordan preset needs k")
        return self


class BackendModel(BaseModel):
    """A pseudo-triangulated category over one algebra"""

    name: str = Field(..., description="Name used by subcategories and --backend")

    kind: str = Field(..., pattern="^(abelian|stable)$", description="abelian (mod-A) or stable (stmod-A)")

    algebra: str = Field(..., description="Name of the algebra")

    inventory: Optional[List[str]] = Field(default=None, description="Objects swept by the checks; all modules over the algebra by default")


class SubcategoryModel(BaseModel):
    """add(objects) inside a backend"""

    name: str = Field(..., description="Name used by triples and --subcategory")

    backend: str = Field(..., description="Name of the backend")

    objects: List[str] = Field(default_factory=list, description="Generating objects; empty means {0}")

    full: bool = Field(default=False, description="The whole backend category")


class TripleModel(BaseModel):
    """(C, Z, D)"""

    name: str = Field(..., description="Name used by --triple")

    z: str = Field(..., description="Subcategory Z")

    d: str = Field(..., description="Subcategory D, contained in Z")


class ChainModel(BaseModel):
    """D <= D' for a declared triple"""

    triple: str = Field(..., description="Triple whose D is the smaller subcategory")

    larger: str = Field(..., description="Subcategory D'")


class WorkspaceModel(BaseModel):
    """Top level of a workspace file"""

    name: str = Field(default="workspace", description="Label used in logs")

    field: FieldSpec = Field(..., description="The prime field")

    seed: Optional[int] = Field(default=None, ge=0, lt=2**64, description="Default seed")

    budget: Budget = Field(default_factory=Budget, description="Default budgets")

    algebras: List[AlgebraModel] = Field(default_factory=list)

    modules: List[ModuleModel] = Field(default_factory=list)

    backends: List[BackendModel] = Field(default_factory=list)

    subcategories: List[SubcategoryModel] = Field(default_factory=list)

    triples: List[TripleModel] = Field(default_factory=list)

    chains: List[ChainModel] = Field(default_factory=list)


@dataclass
class Workspace:
    """A loaded workspace: every name resolved to a live object."""

    name: str
    field: FieldSpec
    seed: int
    budget: Budget
    algebras: Dict[str, Algebra] = dataclass_field(default_factory=dict)
    modules: Dict[str, Module] = dataclass_field(default_factory=dict)
    backends: Dict[str, Backend] = dataclass_field(default_factory=dict)
    inventories: Dict[str, List[Module]] = dataclass_field(default_factory=dict)
    subcategories: Dict[str, SubcategorySpec] = dataclass_field(default_factory=dict)
    triples: Dict[str, FrobeniusTriple] = dataclass_field(default_factory=dict)
    chains: List[tuple] = dataclass_field(default_factory=list)
    cache: Dict[Any, Any] = dataclass_field(default_factory=dict)

    def backend(self, name: Optional[str] = None) -> Backend:
        if name is None:
            if not self.backends:
                raise WorkspaceError(f"workspace {self.name} declares no backend")
            name = next(iter(self.backends))
        return _lookup(self.backends, name, "backend")

    def triple(self, name: Optional[str] = None) -> FrobeniusTriple:
        if name is None:
            if not self.triples:
                raise WorkspaceError(f"workspace {self.name} declares no triple")
            name = next(iter(self.triples))
        return _lookup(self.triples, name, "triple")

    def module(self, name: str) -> Module:
        return _lookup(self.modules, name, "module")

    def subcategory(self, name: str) -> SubcategorySpec:
        return _lookup(self.subcategories, name, "subcategory")


def _lookup(table: Dict[str, Any], name: str, kind: str):
    if name not in table:
        raise WorkspaceError(f"undeclared {kind} '{name}'", entity=name)
    return table[name]


def parse_workspace(text: str, source: str = "<workspace>") -> WorkspaceModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"{source}: invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    try:
        return WorkspaceModel.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = tuple(first.get("loc", ()))
        entity = ".".join(str(part) for part in loc) or "workspace"
        raise WorkspaceError(f"{source}: {entity}: {first['msg']}", entity=entity,
                             invariant=first.get("type")) from exc


def _build_algebra(model: AlgebraModel, field: FieldSpec) -> Algebra:
    if model.preset == "truncated_polynomial":
        return truncated_polynomial_algebra(field, model.n, name=model.name)
    algebra = Algebra(field, model.structure_constants, model.unit, name=model.name)
    diagnostic = validate_algebra(algebra)
    if not diagnostic.ok:
        raise WorkspaceError(f"algebra {model.name}: {diagnostic.message}", entity=model.name,
                             indices=diagnostic.indices)
    return algebra


def _build_module(model: ModuleModel, algebra: Algebra) -> Module:
    if model.preset == "jordan":
        return jordan_module(algebra, model.k, name=model.name)
    if model.preset == "regular":
        return regular_module(algebra, name=model.name)
    if model.preset == "zero" or (model.action is None and model.dim == 0):
        return Module.zero(algebra, name=model.name)
    module = Module(algebra, model.action, name=model.name)
    diagnostic = validate_module(module)
    if not diagnostic.ok:
        raise WorkspaceError(f"module {model.name}: {diagnostic.message}", entity=model.name,
                             indices=diagnostic.indices)
    return module


def resolve_workspace(model: WorkspaceModel, seed: Optional[int] = None, budget: Optional[Budget] = None) -> Workspace:
    """Builds the live objects. ``seed`` and ``budget`` override the file values."""
    seed = seed if seed is not None else (model.seed or 0)
    budget = budget or model.budget
    ws = Workspace(name=model.name, field=model.field, seed=seed, budget=budget)
    try:
        for a in model.algebras:
            ws.algebras[a.name] = _build_algebra(a, model.field)
        for m in model.modules:
            ws.modules[m.name] = _build_module(m, _lookup(ws.algebras, m.algebra, "algebra"))
        for b in model.backends:
            algebra = _lookup(ws.algebras, b.algebra, "algebra")
            if b.inventory is None:
                inventory = [m for m in ws.modules.values() if m.algebra is algebra]
            else:
                inventory = [ws.module(name) for name in b.inventory]
            if b.kind == "abelian":
                backend = AbelianBackend(algebra, budget, seed)
            else:
                backend = StableBackend(algebra, inventory, budget, seed)
            ws.backends[b.name] = backend
            ws.inventories[b.name] = inventory
        for s in model.subcategories:
            backend = ws.backend(s.backend)
            ws.subcategories[s.name] = SubcategorySpec(backend, [ws.module(o) for o in s.objects],
                                                       label=s.name, full=s.full)
        for t in model.triples:
            z, d = ws.subcategory(t.z), ws.subcategory(t.d)
            ws.triples[t.name] = FrobeniusTriple(z.backend, z, d, label=t.name)
        for c in model.chains:
            ws.chains.append((ws.triple(c.triple), ws.subcategory(c.larger)))
    except WorkspaceError:
        raise
    except StableCatError as exc:
        raise WorkspaceError(f"workspace {model.name}: {exc.message}", details=exc.details) from exc
    logger.info(f"workspace {ws.name} loaded: {len(ws.algebras)} algebras, {len(ws.modules)} modules, "
                f"{len(ws.backends)} backends, {len(ws.triples)} triples")
    return ws


def load_workspace(path, seed: Optional[int] = None, budget: Optional[Budget] = None) -> Workspace:
    path = Path(path)
    if not path.is_file():
        raise WorkspaceError(f"workspace file {path} does not exist", entity=str(path))
    return resolve_workspace(parse_workspace(path.read_text(encoding="utf-8"), str(path)), seed, budget)
