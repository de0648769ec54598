import numpy as np

from linalg.field import FieldSpec
from linalg.sampling import coefficient_vectors, derive_rng, is_exhaustive, seeded_random_matrix

F2 = FieldSpec(characteristic=2)


def test_derive_rng_depends_on_seed_and_call_site():
    first = derive_rng(7, "iso", 3).integers(0, 1000, size=10)
    again = derive_rng(7, "iso", 3).integers(0, 1000, size=10)
    other = derive_rng(7, "enumerate", 3).integers(0, 1000, size=10)
    assert first.tolist() == again.tolist()
    assert first.tolist() != other.tolist()


def test_seeded_random_matrix_is_reproducible():
    a = seeded_random_matrix(2, 2, 1, F2)
    assert a.tolist() == seeded_random_matrix(2, 2, 1, F2).tolist()
    assert set(np.unique(a)) <= {0, 1}


def test_coefficient_vectors_exhaustive():
    vectors = list(coefficient_vectors(2, F2, 16, 5, derive_rng(0)))
    assert len(vectors) == 4
    assert not vectors[0].any()
    assert is_exhaustive(2, F2, 16)


def test_coefficient_vectors_sampled_beyond_limit():
    vectors = list(coefficient_vectors(20, F2, 16, 3, derive_rng(0)))
    # zero, the 20 unit vectors, then 3 samples
    assert len(vectors) == 24
    assert not vectors[0].any()
    assert vectors[1].tolist() == [1] + [0] * 19
    assert not is_exhaustive(20, F2, 16)


def test_coefficient_vectors_of_empty_basis():
    vectors = list(coefficient_vectors(0, F2, 16, 3, derive_rng(0)))
    assert len(vectors) == 1
    assert vectors[0].shape == (0,)
