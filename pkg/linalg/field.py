import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

# (p - 1)^2 * n must stay below this for int64 accumulation
_INT64_SAFE = 2**62


class FieldSpec(BaseModel):
    """
    The prime field F_p.

    All matrices handled by the engine are int64 numpy arrays whose entries
    are canonical representatives in [0, p).
    """

    model_config = ConfigDict(frozen=True)

    characteristic: int = Field(..., ge=2, lt=2**31, description="The prime p")

    @field_validator("characteristic")
    @classmethod
    def _must_be_prime(cls, value: int) -> int:
        if not sympy.isprime(value):
            raise ValueError("characteristic must be prime")
        return value

    @property
    def p(self) -> int:
        return self.characteristic

    def reduce(self, a) -> np.ndarray:
        return np.mod(np.asarray(a, dtype=np.int64), self.characteristic)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def inv(self, x: int) -> int:
        x = int(x) % self.characteristic
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(x, -1, self.characteristic)

    def neg(self, a) -> np.ndarray:
        return np.mod(-np.asarray(a, dtype=np.int64), self.characteristic)

    def add(self, a, b) -> np.ndarray:
        return np.mod(np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64), self.characteristic)

    def sub(self, a, b) -> np.ndarray:
        return np.mod(np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64), self.characteristic)

    def scale(self, a, c: int) -> np.ndarray:
        return np.mod(np.asarray(a, dtype=np.int64) * (int(c) % self.characteristic), self.characteristic)

    def matmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        inner = a.shape[-1] if a.ndim else 1
        if (self.characteristic - 1) ** 2 * max(inner, 1) < _INT64_SAFE:
            return np.mod(a @ b, self.characteristic)
        wide = (a.astype(object) @ b.astype(object)) % self.characteristic
        return np.asarray(wide, dtype=np.int64)

    def chain(self, *matrices) -> np.ndarray:
        """Product m_1 @ m_2 @ ... reduced after every step."""
        result = matrices[0]
        for m in matrices[1:]:
            result = self.matmul(result, m)
        return np.asarray(result, dtype=np.int64)

    def __str__(self) -> str:
        return f"F_{self.characteristic}"
