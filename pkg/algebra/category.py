"""
F_p-linear categories whose objects are modules and whose hom-spaces are
Hom_A(M, N) modulo a null subspace.

Every category in the engine is one of these: mod-A has no null maps, a
stable category kills the maps factoring through a fixed set of objects.
All "there exists t with ..." steps go through ``LinearCategory.solve``.
"""
import zlib
from abc import ABC, abstractmethod
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, Iterator, List, Optional, Sequence

import numpy as np
from loguru import logger

from config import Budget
from errors import ContractError
from linalg.elimination import column_complement, inverse, rref_full, row_basis, solve_affine
from linalg.field import FieldSpec
from linalg.sampling import coefficient_vectors, derive_rng, is_exhaustive
from .constructions import dual_regular_module, regular_module
from .decompose import decompose
from .hom import HomSpace, hom_space
from .module import Module, ModuleMorphism


def object_tag(m: Module):
    """Stable, order-independent label of a module for seeding."""
    return m.dim, zlib.crc32(m.action.tobytes())


class QuotientHom:
    """
    Hom_A(M, N) / null, presented by a reduced basis of Hom_A(M, N) whose
    span is a complement of the null subspace.
    """

    def __init__(self, hom: HomSpace, null: Sequence[np.ndarray], field: FieldSpec):
        self.hom = hom
        self.source = hom.source
        self.target = hom.target
        self.field = field
        h = hom.dim
        size = hom.target.dim * hom.source.dim
        if h == 0:
            self._rows = []
            self._row_inverse = field.zeros(0, 0)
            self._frame_inverse = field.zeros(0, 0)
            self.null_rank = 0
            self.reduced = []
            self._null = []
            return
        stacked = np.stack([b.reshape(size) for b in hom.basis], axis=1)
        # h independent rows of the basis matrix give exact coordinates
        rows = list(rref_full(stacked.T, field).pivot_cols)
        self._rows = rows
        self._row_inverse = inverse(stacked[rows, :], field)
        null_coords = [self._hom_coordinates(n) for n in null]
        if null_coords:
            null_basis = row_basis(np.stack(null_coords, axis=0), field).T
        else:
            null_basis = field.zeros(h, 0)
        complement = column_complement(null_basis, field)
        self.null_rank = null_basis.shape[1]
        self._frame_inverse = inverse(np.hstack([null_basis, complement]), field)
        self.reduced = [hom.element(complement[:, j]) for j in range(complement.shape[1])]
        self._null = [hom.element(null_basis[:, j]) for j in range(null_basis.shape[1])]

    @property
    def dim(self) -> int:
        return len(self.reduced)

    def null_morphisms(self) -> List[ModuleMorphism]:
        return list(self._null)

    def _hom_coordinates(self, matrix: np.ndarray) -> np.ndarray:
        vec = self.field.reduce(matrix).reshape(-1)[self._rows]
        return self.field.matmul(self._row_inverse, vec)

    def coordinates(self, phi: ModuleMorphism) -> np.ndarray:
        """Coordinates of phi on the reduced basis (null part discarded)."""
        if self.hom.dim == 0:
            return np.zeros(0, dtype=np.int64)
        full = self.field.matmul(self._frame_inverse, self._hom_coordinates(phi.matrix))
        return full[self.null_rank:]

    def element(self, coeffs) -> ModuleMorphism:
        total = ModuleMorphism.zero(self.source, self.target)
        for c, b in zip(self.field.reduce(coeffs), self.reduced):
            if c:
                total = total + b.scale(int(c))
        return total


@dataclass(frozen=True)
class Unknown:
    source: Module
    target: Module
    label: str = "x"


@dataclass
class Term:
    """One summand left o F(x) o right of a linear constraint."""

    unknown: int
    left: Optional[ModuleMorphism] = None
    right: Optional[ModuleMorphism] = None
    functor: Optional[Callable[[ModuleMorphism], ModuleMorphism]] = None
    sign: int = 1

    def apply(self, x: ModuleMorphism) -> ModuleMorphism:
        value = self.functor(x) if self.functor is not None else x
        if self.right is not None:
            value = value @ self.right
        if self.left is not None:
            value = self.left @ value
        return value.scale(self.sign) if self.sign != 1 else value


@dataclass
class Constraint:
    """sum(terms) == rhs modulo the null maps of rhs's hom-space."""

    terms: List[Term]
    rhs: ModuleMorphism
    label: str = ""


@dataclass
class Solution:
    unknowns: List[Unknown]
    particular: List[ModuleMorphism]
    homogeneous: List[List[ModuleMorphism]] = dataclass_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.homogeneous)

    def combination(self, coeffs) -> List[ModuleMorphism]:
        values = list(self.particular)
        for c, direction in zip(coeffs, self.homogeneous):
            c = int(c)
            if c:
                values = [v + d.scale(c) for v, d in zip(values, direction)]
        return values

    def candidates(self, field: FieldSpec, budget: Budget, rng: np.random.Generator) -> Iterator[List[ModuleMorphism]]:
        """Particular solution first, then the rest of the solution set (sampled when too large)."""
        for coeffs in coefficient_vectors(self.dim, field, budget.enumeration_limit, budget.random_trials, rng):
            yield self.combination(coeffs)

    def exhaustive(self, field: FieldSpec, budget: Budget) -> bool:
        return is_exhaustive(self.dim, field, budget.enumeration_limit)


@dataclass
class IsoResult:
    status: str  # "yes" | "no" | "inconclusive"
    witness: Optional[ModuleMorphism] = None
    inverse: Optional[ModuleMorphism] = None

    @property
    def found(self) -> bool:
        return self.status == "yes"


@dataclass
class Membership:
    status: str  # "yes" | "no" | "inconclusive"
    multiplicities: List[int] = dataclass_field(default_factory=list)
    unmatched: List[str] = dataclass_field(default_factory=list)

    @property
    def member(self) -> bool:
        return self.status == "yes"


class LinearCategory(ABC):
    """
    Base class of the quotient linear categories.

    Subclasses only say which maps are null; hom bases, equality, linear
    solves, inverses and isomorphism search are shared.
    """

    def __init__(self, field: FieldSpec, budget: Optional[Budget] = None, seed: int = 0, label: str = "C"):
        self.field = field
        self.budget = budget or Budget()
        self.seed = seed
        self.label = label
        self._homs: Dict = {}
        self._quotients: Dict = {}

    @abstractmethod
    def null_basis(self, m: Module, n: Module) -> List[np.ndarray]:
        """Matrices spanning the null maps m -> n."""

    def rng(self, *parts) -> np.random.Generator:
        return derive_rng(self.seed, self.label, *parts)

    def hom(self, m: Module, n: Module) -> HomSpace:
        key = (m.key, n.key)
        if key not in self._homs:
            self._homs[key] = hom_space(m, n)
        return self._homs[key]

    def quotient_hom(self, m: Module, n: Module) -> QuotientHom:
        key = (m.key, n.key)
        if key not in self._quotients:
            self._quotients[key] = QuotientHom(self.hom(m, n), self.null_basis(m, n), self.field)
        return self._quotients[key]

    def hom_dim(self, m: Module, n: Module) -> int:
        return self.quotient_hom(m, n).dim

    def is_null(self, f: ModuleMorphism) -> bool:
        return not self.quotient_hom(f.source, f.target).coordinates(f).any()

    def equal(self, f: ModuleMorphism, g: ModuleMorphism) -> bool:
        return self.is_null(f - g)

    def identity(self, m: Module) -> ModuleMorphism:
        return ModuleMorphism.identity(m)

    def zero(self, m: Module, n: Module) -> ModuleMorphism:
        return ModuleMorphism.zero(m, n)

    def solve(self, unknowns: Sequence[Unknown], constraints: Sequence[Constraint]) -> Optional[Solution]:
        field = self.field
        bases = [self.quotient_hom(u.source, u.target).reduced for u in unknowns]
        offsets = np.cumsum([0] + [len(b) for b in bases])
        n_vars = int(offsets[-1])
        blocks, rhs_parts, null_blocks = [], [], []
        for c in constraints:
            size = c.rhs.target.dim * c.rhs.source.dim
            block = field.zeros(size, n_vars)
            for term in c.terms:
                for k, basis_map in enumerate(bases[term.unknown]):
                    value = term.apply(basis_map)
                    if value.source.key != c.rhs.source.key or value.target.key != c.rhs.target.key:
                        raise ContractError(f"constraint {c.label or '?'}: term lands in the wrong hom-space")
                    col = int(offsets[term.unknown]) + k
                    block[:, col] = field.add(block[:, col], value.matrix.reshape(size))
            null = self.quotient_hom(c.rhs.source, c.rhs.target).null_morphisms()
            null_blocks.append(np.stack([n.matrix.reshape(size) for n in null], axis=1) if null
                               else field.zeros(size, 0))
            blocks.append(block)
            rhs_parts.append(c.rhs.matrix.reshape(size, 1))
        n_null = sum(b.shape[1] for b in null_blocks)
        rows = sum(b.shape[0] for b in blocks)
        system = field.zeros(rows, n_vars + n_null)
        r, col = 0, n_vars
        for block, nb in zip(blocks, null_blocks):
            system[r:r + block.shape[0], :n_vars] = block
            system[r:r + block.shape[0], col:col + nb.shape[1]] = nb
            r += block.shape[0]
            col += nb.shape[1]
        rhs = np.vstack(rhs_parts) if rhs_parts else field.zeros(0, 1)
        solution = solve_affine(system, rhs, field)
        if solution is None:
            return None
        coeffs = solution.particular[:n_vars, 0]
        directions = solution.homogeneous_basis[:n_vars, :]
        directions = row_basis(directions.T, field) if directions.size else field.zeros(0, n_vars)

        def assemble(vector) -> List[ModuleMorphism]:
            out = []
            for j, u in enumerate(unknowns):
                q = self.quotient_hom(u.source, u.target)
                out.append(q.element(vector[offsets[j]:offsets[j + 1]]))
            return out

        return Solution(unknowns=list(unknowns), particular=assemble(coeffs),
                        homogeneous=[assemble(d) for d in directions])

    def solve_one(self, unknown: Unknown, constraints: Sequence[Constraint]) -> Optional[ModuleMorphism]:
        solution = self.solve([unknown], constraints)
        return None if solution is None else solution.particular[0]

    def find_inverse(self, f: ModuleMorphism) -> Optional[ModuleMorphism]:
        constraints = [
            Constraint([Term(0, right=f)], self.identity(f.source), "g o f = id"),
            Constraint([Term(0, left=f)], self.identity(f.target), "f o g = id"),
        ]
        return self.solve_one(Unknown(f.target, f.source, "inverse"), constraints)

    def is_iso(self, f: ModuleMorphism) -> bool:
        return self.find_inverse(f) is not None

    def may_be_isomorphic(self, m: Module, n: Module) -> bool:
        return True

    def is_zero_object(self, m: Module) -> bool:
        return m.dim == 0 or self.hom_dim(m, m) == 0

    def find_iso(self, m: Module, n: Module, rng: Optional[np.random.Generator] = None) -> IsoResult:
        if self.is_zero_object(m) and self.is_zero_object(n):
            return IsoResult("yes", self.zero(m, n), self.zero(n, m))
        if not self.may_be_isomorphic(m, n):
            return IsoResult("no")
        forward = self.quotient_hom(m, n)
        dims = {forward.dim, self.hom_dim(n, m), self.hom_dim(m, m), self.hom_dim(n, n)}
        if len(dims) != 1 or forward.dim == 0:
            return IsoResult("no")
        rng = rng or self.rng("iso", object_tag(m), object_tag(n))
        for _ in range(self.budget.decomposition_probes):
            phi = forward.element(rng.integers(0, self.field.p, size=forward.dim))
            inv = self.find_inverse(phi)
            if inv is not None:
                return IsoResult("yes", phi, inv)
        if not is_exhaustive(forward.dim, self.field, self.budget.enumeration_limit):
            logger.warning(f"isomorphism search {m.label()} ~ {n.label()} ran out of budget")
            return IsoResult("inconclusive")
        for coeffs in coefficient_vectors(forward.dim, self.field, self.budget.enumeration_limit, 0, rng):
            phi = forward.element(coeffs)
            inv = self.find_inverse(phi)
            if inv is not None:
                return IsoResult("yes", phi, inv)
        return IsoResult("no")

    def add_membership(self, x: Module, inventory: Sequence[Module]) -> Membership:
        multiplicities = [0] * len(inventory)
        if self.is_zero_object(x):
            return Membership("yes", multiplicities)
        decomposition = decompose(x, self.seed, self.budget)
        unmatched, undecided = [], decomposition.status != "complete"
        for summand in decomposition.summands:
            if self.is_zero_object(summand.module):
                continue
            matched = False
            for i, candidate in enumerate(inventory):
                result = self.find_iso(summand.module, candidate)
                if result.found:
                    multiplicities[i] += 1
                    matched = True
                    break
                undecided = undecided or result.status == "inconclusive"
            if not matched:
                unmatched.append(summand.module.label())
        if not unmatched:
            return Membership("yes", multiplicities)
        return Membership("inconclusive" if undecided else "no", multiplicities, unmatched)

    def enumerate_morphisms(self, m: Module, n: Module, rng: Optional[np.random.Generator] = None,
                            limit: Optional[int] = None) -> Iterator[ModuleMorphism]:
        q = self.quotient_hom(m, n)
        rng = rng or self.rng("enumerate", object_tag(m), object_tag(n))
        limit = self.budget.enumeration_limit if limit is None else limit
        for coeffs in coefficient_vectors(q.dim, self.field, limit, self.budget.random_trials, rng):
            yield q.element(coeffs)

    def commuting_squares(self, f: ModuleMorphism, f2: ModuleMorphism) -> List[List[ModuleMorphism]]:
        """Basis of the pairs (a, b) with b o f == f2 o a."""
        unknowns = [Unknown(f.source, f2.source, "a"), Unknown(f.target, f2.target, "b")]
        constraint = Constraint([Term(1, right=f), Term(0, left=f2, sign=-1)],
                                self.zero(f.source, f2.target), "b f = f' a")
        solution = self.solve(unknowns, [constraint])
        return [] if solution is None else solution.homogeneous

    def combination_coefficients(self, images: Sequence[ModuleMorphism], target: ModuleMorphism) -> Optional[np.ndarray]:
        """Coefficients c with sum c_k images[k] == target, or None."""
        q = self.quotient_hom(target.source, target.target)
        if not images:
            return np.zeros(0, dtype=np.int64) if not q.coordinates(target).any() else None
        columns = np.stack([q.coordinates(img) for img in images], axis=1)
        solution = solve_affine(columns, q.coordinates(target).reshape(-1, 1), self.field)
        return None if solution is None else solution.particular[:, 0]


class ModuleCategory(LinearCategory):
    """mod-A: nothing is null."""

    def __init__(self, field: FieldSpec, budget: Optional[Budget] = None, seed: int = 0):
        super().__init__(field, budget, seed, label="mod")

    def null_basis(self, m: Module, n: Module) -> List[np.ndarray]:
        return []

    def may_be_isomorphic(self, m: Module, n: Module) -> bool:
        return m.dim == n.dim


def isomorphic(m: Module, n: Module, seed: int = 0, budget: Optional[Budget] = None) -> IsoResult:
    if m.dim != n.dim:
        return IsoResult("no")
    return ModuleCategory(m.field, budget, seed).find_iso(m, n)


def is_self_injective(algebra, seed: int = 0, budget: Optional[Budget] = None) -> bool:
    """D(A) lies in add(A), compared summand by summand."""
    category = ModuleCategory(algebra.field, budget, seed)
    projectives = [s.module for s in decompose(regular_module(algebra), seed, budget).summands]
    return category.add_membership(dual_regular_module(algebra), projectives).member
