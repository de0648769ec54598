"""
Splitting modules into indecomposable summands.

Random endomorphisms are split along the primary components of their
characteristic polynomial (factored over F_p with sympy). A module whose
endomorphism probes never split is searched exhaustively when End(M) is
small enough; otherwise the summand is reported as inconclusive.
"""
import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

import numpy as np
import sympy
from loguru import logger
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from config import Budget
from linalg.elimination import inverse, kernel
from linalg.field import FieldSpec
from linalg.sampling import derive_rng
from .constructions import direct_sum, submodule
from .hom import hom_space
from .module import Module, ModuleMorphism

_X = sympy.Symbol("x")


@dataclass
class Summand:
    module: Module
    injection: ModuleMorphism
    projection: ModuleMorphism


@dataclass
class Decomposition:
    module: Module
    summands: List[Summand] = dataclass_field(default_factory=list)
    status: str = "complete"  # "inconclusive" when some summand could not be certified

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def reconstruction(self) -> ModuleMorphism:
        """The isomorphism (+) summands -> module."""
        total = direct_sum([s.module for s in self.summands], algebra=self.module.algebra)
        matrix = np.zeros((self.module.dim, total.module.dim), dtype=np.int64)
        offset = 0
        for s in self.summands:
            matrix[:, offset:offset + s.module.dim] = s.injection.matrix
            offset += s.module.dim
        return ModuleMorphism(total.module, self.module, matrix)


class _Inconclusive(Exception):
    pass


def characteristic_polynomial(e: np.ndarray, field: FieldSpec) -> sympy.Poly:
    domain = GF(field.p)
    n = e.shape[0]
    dm = DomainMatrix([[domain(int(v)) for v in row] for row in e.tolist()], (n, n), domain)
    coeffs = [int(domain.to_sympy(c)) % field.p for c in dm.charpoly()]
    return sympy.Poly(coeffs, _X, modulus=field.p)


def evaluate_polynomial(poly: sympy.Poly, e: np.ndarray, field: FieldSpec) -> np.ndarray:
    n = e.shape[0]
    result = field.zeros(n, n)
    for c in poly.all_coeffs():
        result = field.add(field.matmul(result, e), field.scale(field.identity(n), int(c)))
    return result


def fitting_split(e: np.ndarray, field: FieldSpec) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    Two complementary invariant subspaces (as column bases) cut out by the
    primary decomposition of e, or None when its characteristic polynomial
    is a power of a single irreducible.
    """
    _, factors = characteristic_polynomial(e, field).factor_list()
    if len(factors) < 2:
        return None
    first, multiplicity = factors[0]
    rest = sympy.Poly(1, _X, modulus=field.p)
    for f, k in factors[1:]:
        rest = rest * f ** k
    k1 = kernel(evaluate_polynomial(first ** multiplicity, e, field), field)
    k2 = kernel(evaluate_polynomial(rest, e, field), field)
    if k1.shape[1] == 0 or k2.shape[1] == 0 or k1.shape[1] + k2.shape[1] != e.shape[0]:
        return None
    return k1, k2


def _split_once(m: Module, rng: np.random.Generator, budget: Budget):
    field = m.field
    end = hom_space(m, m)
    if end.dim <= 1:
        return None
    for b in end.basis:
        split = fitting_split(b, field)
        if split:
            return split
    for _ in range(budget.decomposition_probes):
        e = end.element(rng.integers(0, field.p, size=end.dim))
        split = fitting_split(e.matrix, field)
        if split:
            return split
    if field.p ** end.dim <= budget.exhaustive_endomorphism_limit:
        for coeffs in itertools.product(range(field.p), repeat=end.dim):
            split = fitting_split(end.element(coeffs).matrix, field)
            if split:
                return split
        return None
    raise _Inconclusive()


def _decompose_into(m: Module, inj: ModuleMorphism, proj: ModuleMorphism, rng, budget: Budget,
                    out: List[Summand]) -> bool:
    if m.dim == 0:
        return True
    try:
        split = _split_once(m, rng, budget)
    except _Inconclusive:
        logger.warning(f"could not certify {m.label()} as indecomposable within budget")
        out.append(Summand(m, inj, proj))
        return False
    if split is None:
        out.append(Summand(m, inj, proj))
        return True
    first, first_inc = submodule(m, split[0])
    second, second_inc = submodule(m, split[1])
    frame = np.hstack([first_inc.matrix, second_inc.matrix])
    frame_inv = inverse(frame, m.field)
    k = first.dim
    first_proj = ModuleMorphism(m, first, frame_inv[:k])
    second_proj = ModuleMorphism(m, second, frame_inv[k:])
    ok_first = _decompose_into(first, inj @ first_inc, first_proj @ proj, rng, budget, out)
    ok_second = _decompose_into(second, inj @ second_inc, second_proj @ proj, rng, budget, out)
    return ok_first and ok_second


def decompose(m: Module, seed: int = 0, budget: Optional[Budget] = None) -> Decomposition:
    budget = budget or Budget()
    rng = derive_rng(seed, "decompose", m.dim, m.action.tobytes())
    summands: List[Summand] = []
    identity = ModuleMorphism.identity(m)
    complete = _decompose_into(m, identity, identity, rng, budget, summands)
    base = m.label()
    for i, s in enumerate(summands):
        if s.module.name is None:
            s.module.name = f"{base}.{i}" if len(summands) > 1 else base
    logger.debug(f"decomposed {base} into {len(summands)} summands")
    return Decomposition(module=m, summands=summands, status="complete" if complete else "inconclusive")
