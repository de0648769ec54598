from typing import Any, Dict, Optional

import numpy as np

from errors import ContractError
from .algebra import Algebra, Diagnostic


class Module:
    """
    A finite-dimensional left module, given by one d x d action matrix per
    algebra basis element.
    """

    def __init__(self, algebra: Algebra, action, name: Optional[str] = None, dim: Optional[int] = None):
        self.algebra = algebra
        field = algebra.field
        rho = field.reduce(action)
        if dim == 0 or rho.size == 0:
            rho = np.zeros((algebra.dim, 0, 0), dtype=np.int64)
        if rho.ndim != 3 or rho.shape[0] != algebra.dim or rho.shape[1] != rho.shape[2]:
            raise ContractError(f"module {name or '?'}: expected {algebra.dim} square action matrices, got {rho.shape}")
        self.action = rho
        self.name = name
        self._key = (id(algebra), rho.shape[1], rho.tobytes())

    @classmethod
    def zero(cls, algebra: Algebra, name: str = "0") -> "Module":
        return cls(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64), name=name, dim=0)

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def key(self):
        return self._key

    def act(self, i: int) -> np.ndarray:
        return self.action[i]

    def act_by(self, element) -> np.ndarray:
        """Matrix of the action of an arbitrary algebra element."""
        coeffs = self.field.reduce(element)
        total = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, c in enumerate(coeffs):
            if c:
                total = total + int(c) * self.action[i]
        return self.field.reduce(total)

    def named(self, name: str) -> "Module":
        self.name = name
        return self

    def label(self) -> str:
        return self.name or f"<{self.dim}-dim>"

    def to_payload(self) -> Dict[str, Any]:
        return {"name": self.name, "dim": self.dim, "action": self.action.tolist()}

    def __repr__(self) -> str:
        return f"<Module {self.label()} dim={self.dim} over {self.algebra.name}>"


class ModuleMorphism:
    """
    An A-linear map, stored as a target.dim x source.dim matrix.

    ``g @ f`` is the composite g o f.
    """

    def __init__(self, source: Module, target: Module, matrix, check_shape: bool = True):
        self.source = source
        self.target = target
        m = source.field.reduce(matrix)
        if m.size == 0:
            m = np.zeros((target.dim, source.dim), dtype=np.int64)
        if check_shape and m.shape != (target.dim, source.dim):
            raise ContractError(
                f"morphism {source.label()} -> {target.label()} needs a {target.dim}x{source.dim} matrix, got {m.shape}")
        self.matrix = m

    @classmethod
    def identity(cls, m: Module) -> "ModuleMorphism":
        return cls(m, m, np.eye(m.dim, dtype=np.int64))

    @classmethod
    def zero(cls, source: Module, target: Module) -> "ModuleMorphism":
        return cls(source, target, np.zeros((target.dim, source.dim), dtype=np.int64))

    @property
    def field(self):
        return self.source.field

    def _check_parallel(self, other: "ModuleMorphism") -> None:
        if self.source.key != other.source.key or self.target.key != other.target.key:
            raise ContractError(
                f"cannot combine {self.source.label()}->{self.target.label()} with "
                f"{other.source.label()}->{other.target.label()}")

    def __matmul__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        if other.target.key != self.source.key:
            raise ContractError(
                f"cannot compose {self.source.label()}->{self.target.label()} after "
                f"{other.source.label()}->{other.target.label()}")
        return ModuleMorphism(other.source, self.target, self.field.matmul(self.matrix, other.matrix))

    def __add__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        self._check_parallel(other)
        return ModuleMorphism(self.source, self.target, self.field.add(self.matrix, other.matrix))

    def __sub__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        self._check_parallel(other)
        return ModuleMorphism(self.source, self.target, self.field.sub(self.matrix, other.matrix))

    def __neg__(self) -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, self.field.neg(self.matrix))

    def scale(self, c: int) -> "ModuleMorphism":
        return ModuleMorphism(self.source, self.target, self.field.scale(self.matrix, c))

    def is_zero(self) -> bool:
        return not self.matrix.any()

    def same_as(self, other: "ModuleMorphism") -> bool:
        """Bit-exact equality of representatives."""
        return (self.source.key == other.source.key and self.target.key == other.target.key
                and np.array_equal(self.matrix, other.matrix))

    def to_payload(self) -> Dict[str, Any]:
        return {"source": self.source.label(), "target": self.target.label(), "matrix": self.matrix.tolist()}

    def __repr__(self) -> str:
        return f"<ModuleMorphism {self.source.label()} -> {self.target.label()}>"


def validate_module(m: Module) -> Diagnostic:
    field = m.field
    algebra = m.algebra
    if not np.array_equal(m.act_by(algebra.unit), field.identity(m.dim)):
        return Diagnostic(ok=False, message="the unit does not act as the identity")
    c = algebra.structure_constants
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            lhs = field.matmul(m.action[i], m.action[j])
            rhs = m.act_by(c[i, j])
            if not np.array_equal(lhs, rhs):
                return Diagnostic(ok=False, indices=[i, j],
                                  message=f"action does not respect the product b_{i}*b_{j}")
    return Diagnostic(ok=True)


def validate_morphism(f: ModuleMorphism) -> Diagnostic:
    if f.source.algebra is not f.target.algebra:
        return Diagnostic(ok=False, message="source and target live over different algebras")
    field = f.field
    for i in range(f.source.algebra.dim):
        if not np.array_equal(field.matmul(f.matrix, f.source.action[i]), field.matmul(f.target.action[i], f.matrix)):
            return Diagnostic(ok=False, indices=[i], message=f"matrix does not intertwine the action of b_{i}")
    return Diagnostic(ok=True)
