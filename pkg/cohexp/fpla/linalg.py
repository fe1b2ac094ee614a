from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np
from loguru import logger

from cohexp.exceptions import ContractError, check_cap
from cohexp.fpla.field import FpVector, PrimeField
from cohexp.settings import resolve_cap


def rref(
    field: PrimeField, m: Sequence[Sequence[int]] | np.ndarray
) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """
    Reduced row-echelon form over F_p.

    Args:
        field: The prime field.
        m: Matrix with entries in {0, ..., p-1} (anything else is reduced mod p).

    Returns:
        The rank and the reduced matrix (same shape, zero rows last).
    """
    p = field.p
    a = np.array(m, dtype=np.int64).reshape(len(m), -1) % p if len(m) else None
    if a is None or a.size == 0:
        return 0, tuple(tuple(int(x) for x in row) for row in m)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        r += 1
    return r, tuple(tuple(int(x) for x in row) for row in a)


def gaussian_binomial(p: int, n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if not 0 <= k <= n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """
    A subspace of F_p^n held by its RREF basis.

    Two Subspace values are equal exactly when they are equal as sets, since the
    RREF basis is canonical. Build one with ``Subspace.span``; the constructor
    checks that the basis it is handed is already canonical.
    """

    field: PrimeField
    ambient_dim: int
    basis: tuple[FpVector, ...]

    def __post_init__(self) -> None:
        last_pivot = -1
        for row in self.basis:
            if row.field != self.field or len(row) != self.ambient_dim:
                raise ContractError("basis vector does not live in the ambient space")
            pivot = _pivot(row)
            if pivot is None or pivot <= last_pivot or row[pivot] != 1:
                raise ContractError(f"basis {self.basis} is not in RREF")
            for other in self.basis:
                if other is not row and other[pivot] != 0:
                    raise ContractError(f"basis {self.basis} is not in RREF")
            last_pivot = pivot

    @classmethod
    def span(
        cls, field: PrimeField, ambient_dim: int, vectors: Iterable[FpVector]
    ) -> "Subspace":
        rows = [tuple(v.digits) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ContractError(
                    f"vector of length {len(row)} in ambient dimension {ambient_dim}"
                )
        rank, reduced = rref(field, rows)
        return cls(field, ambient_dim, tuple(FpVector(field, r) for r in reduced[:rank]))

    @classmethod
    def zero(cls, field: PrimeField, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, ())

    @classmethod
    def whole(cls, field: PrimeField, ambient_dim: int) -> "Subspace":
        return cls(
            field,
            ambient_dim,
            tuple(field.unit(ambient_dim, i) for i in range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(row) for row in self.basis)  # type: ignore[misc]

    def __contains__(self, v: FpVector) -> bool:
        return contains(self, v)

    def elements(self) -> Iterator[FpVector]:
        """All p^dim elements, by coefficient tuples in lexicographic order."""
        zero = self.field.zero(self.ambient_dim)
        for coefficients in itertools.product(range(self.field.p), repeat=self.dim):
            v = zero
            for c, row in zip(coefficients, self.basis):
                if c:
                    v = v + row * c
            yield v

    def sum(self, other: "Subspace") -> "Subspace":
        _check_compatible(self, other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __repr__(self) -> str:
        return f"span{{{', '.join(map(repr, self.basis))}}}"


def _pivot(v: FpVector) -> Optional[int]:
    for i, d in enumerate(v.digits):
        if d:
            return i
    return None


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise ContractError(
            f"subspaces of {a.field}^{a.ambient_dim} and {b.field}^{b.ambient_dim}"
        )


def contains(s: Subspace, v: FpVector) -> bool:
    """Membership by reduction against the RREF basis."""
    if v.field != s.field or len(v) != s.ambient_dim:
        raise ContractError("vector does not live in the ambient space")
    residue = v
    for row in s.basis:
        c = residue[_pivot(row)]  # type: ignore[index]
        if c:
            residue = residue - row * c
    return residue.is_zero()


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """
    Intersection by the Zassenhaus trick: reduce [[A, A], [B, 0]] and read the
    right halves of the rows whose left half vanishes.
    """
    _check_compatible(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.field, n)
    rows = [row.digits + row.digits for row in a.basis]
    rows += [row.digits + (0,) * n for row in b.basis]
    rank, reduced = rref(a.field, rows)
    right = [
        FpVector(a.field, row[n:])
        for row in reduced[:rank]
        if not any(row[:n])
    ]
    return Subspace.span(a.field, n, right)


def enumerate_subspaces(
    field: PrimeField, n: int, k: int, cap: Optional[int] = None
) -> list[Subspace]:
    """
    All k-dimensional subspaces of F_p^n, generated directly as RREF matrices.

    Pivot patterns are walked in lexicographic order and the free entries of
    each pattern in base-p order, so the output is duplicate free and stable.

    Raises:
        ContractError: If k is outside [0, n].
        CapExceededError: If the Gaussian binomial count exceeds the cap.
    """
    if not 0 <= k <= n:
        raise ContractError(f"target dimension {k} outside [0, {n}]")
    total = gaussian_binomial(field.p, n, k)
    check_cap(f"{k}-subspaces of {field}^{n}", total, resolve_cap(cap, "enumeration_cap"))
    result: list[Subspace] = []
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i, c in enumerate(pivots)
            for j in range(c + 1, n)
            if j not in pivot_set
        ]
        for values in itertools.product(range(field.p), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), value in zip(free, values):
                rows[i][j] = value
            result.append(
                Subspace(field, n, tuple(FpVector(field, tuple(r)) for r in rows))
            )
    logger.debug(f"enumerated {len(result)} subspaces of dim {k} in {field}^{n}")
    return result
