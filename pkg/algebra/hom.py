from dataclasses import dataclass, field as dataclass_field
from typing import List

import numpy as np
from loguru import logger

from errors import ContractError
from linalg.elimination import rref_full
from .module import Module, ModuleMorphism


@dataclass
class HomSpace:
    """A basis of the intertwiners source -> target."""

    source: Module
    target: Module
    basis: List[np.ndarray] = dataclass_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def morphisms(self) -> List[ModuleMorphism]:
        return [ModuleMorphism(self.source, self.target, b) for b in self.basis]

    def element(self, coeffs) -> ModuleMorphism:
        field = self.source.field
        total = np.zeros((self.target.dim, self.source.dim), dtype=np.int64)
        for c, b in zip(field.reduce(coeffs), self.basis):
            if c:
                total = field.add(total, field.scale(b, c))
        return ModuleMorphism(self.source, self.target, total)


def intertwining_system(m: Module, n: Module) -> np.ndarray:
    """
    Coefficient matrix of X rho^m_i - rho^n_i X = 0 in the row-major
    vectorisation of the n.dim x m.dim unknown X.
    """
    field = m.field
    dm, dn = m.dim, n.dim
    blocks = []
    for i in m.algebra.generators:
        right = np.kron(np.eye(dn, dtype=np.int64), m.action[i].T)
        left = np.kron(n.action[i], np.eye(dm, dtype=np.int64))
        blocks.append(field.sub(right, left))
    if not blocks:
        return np.zeros((0, dm * dn), dtype=np.int64)
    return np.vstack(blocks)


def hom_space(m: Module, n: Module) -> HomSpace:
    if m.algebra is not n.algebra:
        raise ContractError(f"Hom({m.label()}, {n.label()}): modules over different algebras")
    if m.dim == 0 or n.dim == 0:
        return HomSpace(m, n, [])
    result = rref_full(intertwining_system(m, n), m.field)
    basis = [result.kernel_basis[:, k].reshape(n.dim, m.dim).copy() for k in range(result.kernel_basis.shape[1])]
    logger.debug(f"dim Hom({m.label()}, {n.label()}) = {len(basis)}")
    return HomSpace(m, n, basis)
