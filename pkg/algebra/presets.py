import numpy as np

from errors import ContractError
from linalg.field import FieldSpec
from .algebra import Algebra
from .module import Module


def truncated_polynomial_algebra(field: FieldSpec, n: int, name: str = None) -> Algebra:
    """F_p[x]/(x^n) on the basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ContractError(f"truncated polynomial algebra needs n >= 1, got {n}")
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n - i):
            c[i, j, i + j] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    generators = [1] if n > 1 else []
    return Algebra(field, c, unit, name=name or f"{field}[x]/(x^{n})", generators=generators)


def jordan_module(algebra: Algebra, k: int, name: str = None) -> Module:
    """
    F_p[x]/(x^k) as a module over a truncated polynomial algebra, the
    nilpotent Jordan block of size k.
    """
    n = algebra.dim
    if not 0 <= k <= n:
        raise ContractError(f"jordan block of size {k} does not exist over {algebra.name}")
    action = np.zeros((n, k, k), dtype=np.int64)
    for i in range(n):
        for j in range(k - i):
            action[i, j + i, j] = 1
    return Module(algebra, action, name=name or f"J{k}", dim=k)
