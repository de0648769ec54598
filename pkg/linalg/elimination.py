"""
Dense Gaussian elimination over F_p.

Provides reduced row echelon form, kernels and affine solution sets.
Zero-sized matrices (0 x n, n x 0) are handled without special cases by
callers: they flow through the same code paths.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from errors import ContractError
from .field import FieldSpec


@dataclass(frozen=True)
class RrefResult:
    rref: np.ndarray
    rank: int
    pivot_cols: Tuple[int, ...]
    kernel_basis: np.ndarray  # cols x (cols - rank), one kernel vector per column


@dataclass(frozen=True)
class AffineSolution:
    particular: np.ndarray  # n x k
    homogeneous_basis: np.ndarray  # n x d


def _as_matrix(m, field: FieldSpec) -> np.ndarray:
    a = field.reduce(m)
    if a.ndim != 2:
        raise ContractError(f"expected a 2-dimensional matrix, got shape {a.shape}")
    return a.copy()


def _eliminate(a: np.ndarray, field: FieldSpec, stop_col: Optional[int] = None) -> Tuple[np.ndarray, list]:
    p = field.p
    rows, cols = a.shape
    limit = cols if stop_col is None else stop_col
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        i = r + int(nonzero[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * field.inv(a[r, c])) % p
        factors = a[:, c].copy()
        factors[r] = 0
        if factors.any():
            a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
        if c >= limit:
            # a pivot beyond stop_col only matters as an inconsistency flag
            break
    return a, pivots


def rref_full(m, field: FieldSpec) -> RrefResult:
    a = _as_matrix(m, field)
    rows, cols = a.shape
    reduced, pivots = _eliminate(a, field)
    rank = len(pivots)
    free = [c for c in range(cols) if c not in set(pivots)]
    kernel = field.zeros(cols, len(free))
    for k, fc in enumerate(free):
        kernel[fc, k] = 1
        for row, pc in enumerate(pivots):
            kernel[pc, k] = (-reduced[row, fc]) % field.p
    return RrefResult(rref=reduced, rank=rank, pivot_cols=tuple(pivots), kernel_basis=kernel)


def rank(m, field: FieldSpec) -> int:
    return rref_full(m, field).rank


def kernel(m, field: FieldSpec) -> np.ndarray:
    return rref_full(m, field).kernel_basis


def solve_affine(a, b, field: FieldSpec) -> Optional[AffineSolution]:
    """
    Solve a @ x = b column-wise.

    Returns None when the system is inconsistent; otherwise a particular
    solution and a basis of the homogeneous solutions.
    """
    a = _as_matrix(a, field)
    b = _as_matrix(b, field)
    if a.shape[0] != b.shape[0]:
        raise ContractError(f"solve_affine: a has {a.shape[0]} rows but b has {b.shape[0]}",
                            a_shape=list(a.shape), b_shape=list(b.shape))
    n = a.shape[1]
    k = b.shape[1]
    reduced, pivots = _eliminate(np.hstack([a, b]), field, stop_col=n)
    if any(c >= n for c in pivots):
        return None
    particular = field.zeros(n, k)
    for row, pc in enumerate(pivots):
        particular[pc, :] = reduced[row, n:]
    homogeneous = rref_full(a, field).kernel_basis
    return AffineSolution(particular=particular, homogeneous_basis=homogeneous)


def inverse(m, field: FieldSpec) -> Optional[np.ndarray]:
    a = _as_matrix(m, field)
    if a.shape[0] != a.shape[1]:
        return None
    solution = solve_affine(a, field.identity(a.shape[0]), field)
    if solution is None or solution.homogeneous_basis.shape[1] > 0:
        return None
    return solution.particular


def row_basis(vectors, field: FieldSpec) -> np.ndarray:
    """Independent rows spanning the row space of ``vectors``."""
    a = _as_matrix(vectors, field)
    result = rref_full(a, field)
    return result.rref[: result.rank]


def column_complement(basis, field: FieldSpec) -> np.ndarray:
    """Standard basis columns completing the columns of ``basis`` to a basis of F_p^n."""
    a = _as_matrix(basis, field)
    n = a.shape[0]
    pivots = rref_full(np.hstack([a, field.identity(n)]), field).pivot_cols
    chosen = [c - a.shape[1] for c in pivots if c >= a.shape[1]]
    return field.identity(n)[:, chosen]
