import itertools
import zlib
from typing import Iterator

import numpy as np

from .field import FieldSpec

_SEED_MASK = 2**64 - 1


def derive_rng(seed: int, *parts) -> np.random.Generator:
    """A generator that depends only on the seed and the labelled call site."""
    salt = [zlib.crc32(repr(part).encode("utf-8")) for part in parts]
    return np.random.default_rng(np.random.SeedSequence([int(seed) & _SEED_MASK, *salt]))


def seeded_random_matrix(rows: int, cols: int, seed: int, field: FieldSpec) -> np.ndarray:
    rng = np.random.default_rng(np.random.SeedSequence([int(seed) & _SEED_MASK, rows, cols, field.p]))
    return rng.integers(0, field.p, size=(rows, cols), dtype=np.int64)


def coefficient_vectors(count: int, field: FieldSpec, limit: int, samples: int,
                        rng: np.random.Generator) -> Iterator[np.ndarray]:
    """
    Coefficient vectors for linear combinations of ``count`` basis elements.

    Every vector when p**count <= limit (zero vector first), otherwise the
    zero vector, the unit vectors and ``samples`` seeded random vectors.
    """
    if count == 0:
        yield np.zeros(0, dtype=np.int64)
        return
    if field.p ** count <= limit:
        for coeffs in itertools.product(range(field.p), repeat=count):
            yield np.array(coeffs, dtype=np.int64)
        return
    yield np.zeros(count, dtype=np.int64)
    for i in range(count):
        unit = np.zeros(count, dtype=np.int64)
        unit[i] = 1
        yield unit
    for _ in range(samples):
        yield rng.integers(0, field.p, size=count, dtype=np.int64)


def is_exhaustive(count: int, field: FieldSpec, limit: int) -> bool:
    return field.p ** count <= limit
