from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from cohexp.exceptions import ContractError
from cohexp.fpla.exceptions import UnsupportedFieldError

MAX_CHARACTERISTIC = 251


def is_prime(n: int) -> bool:
    """Deterministic trial division; plenty for n <= 251."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for an odd prime 3 <= p <= 251."""

    p: int

    def __post_init__(self) -> None:
        v = self.p
        if isinstance(v, bool) or not isinstance(v, int):
            raise UnsupportedFieldError(-1, f"characteristic must be an int, got {v!r}")
        if v == 2:
            raise UnsupportedFieldError(v)
        if not is_prime(v):
            raise UnsupportedFieldError(v, "not a prime")
        if v > MAX_CHARACTERISTIC:
            raise UnsupportedFieldError(v, f"must not exceed {MAX_CHARACTERISTIC}")

    def __repr__(self) -> str:
        return f"F{self.p}"

    def reduce(self, x: int) -> int:
        return x % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ContractError("zero has no inverse")
        return pow(x, -1, self.p)

    @property
    def half(self) -> int:
        return self.inv(2)

    def vector(self, digits: Sequence[int]) -> "FpVector":
        return FpVector(self, tuple(int(d) % self.p for d in digits))

    def zero(self, n: int) -> "FpVector":
        return FpVector(self, (0,) * n)

    def unit(self, n: int, i: int) -> "FpVector":
        return FpVector(self, tuple(1 if j == i else 0 for j in range(n)))

    def vectors(self, n: int) -> Iterator["FpVector"]:
        """All p^n vectors of F_p^n in index order."""
        for index in range(self.p**n):
            yield vector_from_index(self, n, index)


@dataclass(frozen=True)
class FpVector:
    field: PrimeField
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.field.p
        if any(not 0 <= d < p for d in self.digits):
            raise ContractError(f"digits {self.digits} not reduced mod {p}")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def _check(self, other: "FpVector") -> None:
        if other.field != self.field or len(other) != len(self):
            raise ContractError(
                f"incompatible vectors: {self.field}^{len(self)} vs {other.field}^{len(other)}"
            )

    def __add__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.field.p
        return FpVector(
            self.field, tuple((a + b) % p for a, b in zip(self.digits, other.digits))
        )

    def __sub__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.field.p
        return FpVector(
            self.field, tuple((a - b) % p for a, b in zip(self.digits, other.digits))
        )

    def __neg__(self) -> "FpVector":
        p = self.field.p
        return FpVector(self.field, tuple((-a) % p for a in self.digits))

    def __mul__(self, scalar: int) -> "FpVector":
        p = self.field.p
        return FpVector(self.field, tuple((scalar * a) % p for a in self.digits))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.digits)

    @property
    def index(self) -> int:
        return vector_index(self.field.p, self.digits)

    def __repr__(self) -> str:
        return f"({', '.join(map(str, self.digits))})"


def vector_index(p: int, digits: Sequence[int]) -> int:
    """Base-p encoding; digit 0 is the most significant."""
    index = 0
    for d in digits:
        index = index * p + d
    return index


def vector_from_index(field: PrimeField, n: int, index: int) -> FpVector:
    p = field.p
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        index, digits[i] = divmod(index, p)
    return FpVector(field, tuple(digits))
