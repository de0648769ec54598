import numpy as np

from linalg.elimination import column_complement, inverse, kernel, rank, rref_full, row_basis, solve_affine
from linalg.field import FieldSpec

F2 = FieldSpec(characteristic=2)
F3 = FieldSpec(characteristic=3)
F5 = FieldSpec(characteristic=5)


def test_rref_rank_and_kernel():
    m = np.array([[1, 2], [2, 4]])
    result = rref_full(m, F5)
    assert result.rank == 1
    assert result.pivot_cols == (0,)
    assert result.kernel_basis.shape == (2, 1)
    assert not F5.matmul(m, result.kernel_basis).any()


def test_zero_sized_matrices_flow_through():
    empty = np.zeros((0, 3), dtype=np.int64)
    assert rank(empty, F3) == 0
    assert kernel(empty, F3).shape == (3, 3)
    assert rank(np.zeros((3, 0), dtype=np.int64), F3) == 0


def test_solve_affine_consistent():
    b = np.array([[1], [2]])
    solution = solve_affine(np.eye(2, dtype=np.int64), b, F3)
    assert solution.particular.tolist() == [[1], [2]]
    assert solution.homogeneous_basis.shape == (2, 0)


def test_solve_affine_with_free_directions():
    a = np.array([[1, 1]])
    solution = solve_affine(a, np.array([[1]]), F2)
    assert F2.matmul(a, solution.particular).tolist() == [[1]]
    assert solution.homogeneous_basis.shape == (2, 1)
    assert not F2.matmul(a, solution.homogeneous_basis).any()


def test_solve_affine_inconsistent():
    a = np.array([[1, 0], [0, 0]])
    assert solve_affine(a, np.array([[1], [1]]), F2) is None


def test_inverse():
    m = np.array([[1, 1], [0, 1]])
    inv = inverse(m, F2)
    assert F2.matmul(m, inv).tolist() == [[1, 0], [0, 1]]
    assert inverse(np.array([[1, 2], [2, 4]]), F5) is None
    assert inverse(np.array([[1, 0, 0]]), F5) is None


def test_row_basis_and_complement():
    vectors = np.array([[1, 1, 0], [2, 2, 0], [0, 1, 1]])
    basis = row_basis(vectors, F3)
    assert basis.shape == (2, 3)
    column = np.array([[1], [1]])
    complement = column_complement(column, F2)
    assert complement.shape == (2, 1)
    assert rank(np.hstack([column, complement]), F2) == 2
