import numpy as np
import pytest
from pydantic import ValidationError

from linalg.field import FieldSpec


def test_non_prime_characteristic_is_rejected():
    with pytest.raises(ValidationError) as exc:
        FieldSpec(characteristic=4)
    assert "characteristic must be prime" in str(exc.value)


def test_reduce_gives_canonical_representatives():
    f5 = FieldSpec(characteristic=5)
    assert f5.reduce([-1, 7, 5]).tolist() == [4, 2, 0]
    assert f5.neg([1, 0]).tolist() == [4, 0]


def test_inverse():
    f7 = FieldSpec(characteristic=7)
    assert f7.inv(3) == 5
    assert f7.inv(-1) == 6
    with pytest.raises(ZeroDivisionError):
        f7.inv(14)


def test_matmul_switches_to_exact_products_for_large_primes():
    p = 2**31 - 1
    big = FieldSpec(characteristic=p)
    a = np.array([[p - 1, p - 1]], dtype=np.int64)
    b = np.array([[p - 1], [p - 1]], dtype=np.int64)
    # 2 (p - 1)^2 overflows int64; (-1)(-1) + (-1)(-1) = 2
    assert big.matmul(a, b).tolist() == [[2]]


def test_chain_reduces_after_every_product():
    f3 = FieldSpec(characteristic=3)
    m = np.array([[1, 1], [0, 1]])
    assert f3.chain(m, m, m).tolist() == [[1, 0], [0, 1]]
