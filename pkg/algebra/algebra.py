from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field

from errors import ContractError
from linalg.field import FieldSpec


class Diagnostic(BaseModel):
    """Outcome of a structural validation"""

    ok: bool = Field(..., description="True when every identity holds")
    message: str = Field(default="pass", description="First violated identity, or 'pass'")
    indices: List[int] = Field(default_factory=list, description="Basis indices where the violation occurs")


class Algebra:
    """
    A finite-dimensional associative unital algebra over F_p.

    Attributes:
        field (FieldSpec): the base field.
        structure_constants (ndarray): c[i, j, k] with b_i * b_j = sum_k c[i, j, k] b_k.
        unit (ndarray): coordinates of 1.
        generators (list): basis indices that generate A as an algebra.
        name (str): label used in logs and reports.
    """

    def __init__(self, field: FieldSpec, structure_constants, unit, name: str = "A",
                 generators: Optional[List[int]] = None):
        self.field = field
        c = field.reduce(structure_constants)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise ContractError(f"structure constants of {name} must be an n x n x n array, got {c.shape}")
        u = field.reduce(unit)
        if u.shape != (c.shape[0],):
            raise ContractError(f"unit of {name} must have length {c.shape[0]}")
        self.structure_constants = c
        self.unit = u
        self.name = name
        # basis indices generating the algebra; hom-space systems only need these
        self.generators = list(range(c.shape[0])) if generators is None else list(generators)
        self._left = None
        self._right = None

    @property
    def dim(self) -> int:
        return self.structure_constants.shape[0]

    def multiply(self, u, v) -> np.ndarray:
        n = self.dim
        flat = self.structure_constants.reshape(n, n * n)
        partial = self.field.matmul(self.field.reduce(u).reshape(1, n), flat).reshape(n, n)
        return self.field.matmul(self.field.reduce(v).reshape(1, n), partial).reshape(n)

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def left_regular_action(self) -> np.ndarray:
        """rho_i[k, j] = c[i, j, k]: left multiplication by b_i."""
        if self._left is None:
            self._left = np.transpose(self.structure_constants, (0, 2, 1)).copy()
        return self._left

    def right_regular_action(self) -> np.ndarray:
        """sigma_i[k, j] = c[j, i, k]: right multiplication by b_i."""
        if self._right is None:
            self._right = np.transpose(self.structure_constants, (1, 2, 0)).copy()
        return self._right

    def __repr__(self) -> str:
        return f"<Algebra {self.name} dim={self.dim} over {self.field}>"


def validate_algebra(algebra: Algebra) -> Diagnostic:
    n = algebra.dim
    one = algebra.unit
    for i in range(n):
        b = algebra.basis_vector(i)
        if not np.array_equal(algebra.multiply(one, b), b):
            return Diagnostic(ok=False, message=f"left unit law fails: 1*b_{i} != b_{i}", indices=[i])
        if not np.array_equal(algebra.multiply(b, one), b):
            return Diagnostic(ok=False, message=f"right unit law fails: b_{i}*1 != b_{i}", indices=[i])
    products = [[algebra.multiply(algebra.basis_vector(i), algebra.basis_vector(j)) for j in range(n)]
                for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = algebra.multiply(products[i][j], algebra.basis_vector(k))
                right = algebra.multiply(algebra.basis_vector(i), products[j][k])
                if not np.array_equal(left, right):
                    return Diagnostic(ok=False, indices=[i, j, k],
                                      message=f"associativity fails: (b_{i}b_{j})b_{k} != b_{i}(b_{j}b_{k})")
    return Diagnostic(ok=True)


def same_algebra(a: Optional[Algebra], b: Optional[Algebra]) -> bool:
    return a is b
