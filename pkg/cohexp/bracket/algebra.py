from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Mapping, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel

from cohexp.bracket.exceptions import MalformedAlgebraError
from cohexp.exceptions import ContractError
from cohexp.fpla import FpVector, PrimeField, Subspace, enumerate_subspaces
from cohexp.fpla.exceptions import UnsupportedFieldError


class AlgebraValidation(BaseModel):
    alternating: bool
    jacobi: bool


@dataclass(frozen=True)
class BracketAlgebra:
    """
    An algebra over F_p with a bilinear bracket given on a basis.

    ``structure[i][j]`` is the vector [b_i, b_j]; the bracket of arbitrary
    vectors is its bilinear extension. Nothing here forces the table to be
    alternating or to satisfy Jacobi; ``validate`` reports both.
    """

    field: PrimeField
    dim: int
    names: tuple[str, ...]
    structure: tuple[tuple[FpVector, ...], ...]

    def __post_init__(self) -> None:
        n = self.dim
        if len(self.names) != n or len(set(self.names)) != n:
            raise MalformedAlgebraError(
                f"expected {n} distinct basis names, got {list(self.names)}"
            )
        if len(self.structure) != n or any(len(row) != n for row in self.structure):
            raise MalformedAlgebraError(f"structure table is not {n} x {n}")
        for row in self.structure:
            for v in row:
                if v.field != self.field or len(v) != n:
                    raise MalformedAlgebraError(
                        f"structure entry {v} is not a vector of {self.field}^{n}"
                    )

    @classmethod
    def from_table(
        cls,
        field: PrimeField,
        names: Sequence[str],
        table: Sequence[Sequence[Sequence[int]]],
    ) -> "BracketAlgebra":
        """Build from an n x n x n integer table; entries are reduced mod p."""
        n = len(names)
        if len(table) != n or any(len(row) != n for row in table):
            raise MalformedAlgebraError(f"structure table is not {n} x {n}")
        structure = []
        for row in table:
            vectors = []
            for entry in row:
                if len(entry) != n:
                    raise MalformedAlgebraError(
                        f"structure entry {list(entry)} does not have length {n}"
                    )
                vectors.append(field.vector(entry))
            structure.append(tuple(vectors))
        return cls(field, n, tuple(names), tuple(structure))

    @classmethod
    def from_brackets(
        cls,
        field: PrimeField,
        names: Sequence[str],
        brackets: Mapping[tuple[int, int], Sequence[int]],
    ) -> "BracketAlgebra":
        """
        Build from the brackets [b_i, b_j] for i < j; the rest of the table is
        filled in as an alternating form.
        """
        n = len(names)
        table = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (i, j), value in brackets.items():
            if not (0 <= i < j < n):
                raise MalformedAlgebraError(f"bracket index pair ({i}, {j}) needs i < j < {n}")
            if len(value) != n:
                raise MalformedAlgebraError(
                    f"bracket ({i}, {j}) has {len(value)} coordinates, expected {n}"
                )
            table[i][j] = [int(c) for c in value]
            table[j][i] = [-int(c) for c in value]
        return cls.from_table(field, names, table)

    @classmethod
    def zero(
        cls, field: PrimeField, n: int, names: Optional[Sequence[str]] = None
    ) -> "BracketAlgebra":
        return cls.from_brackets(field, names or [f"e{i}" for i in range(n)], {})

    def basis_vector(self, name: str) -> FpVector:
        try:
            return self.field.unit(self.dim, self.names.index(name))
        except ValueError:
            raise ContractError(f"unknown basis name '{name}'. Available: {list(self.names)}")

    def vector(self, coordinates: Mapping[str, int]) -> FpVector:
        """Vector from name -> coefficient, e.g. {"h": 1, "x+": 1}."""
        v = self.field.zero(self.dim)
        for name, c in coordinates.items():
            v = v + self.basis_vector(name) * c
        return v

    @cached_property
    def structure_tensor(self) -> np.ndarray:
        """C[i, j, k] = k-th coordinate of [b_i, b_j]."""
        return np.array(
            [[list(v.digits) for v in row] for row in self.structure], dtype=np.int64
        ).reshape(self.dim, self.dim, self.dim)

    def bracket(self, u: FpVector, v: FpVector) -> FpVector:
        return bracket_eval(self, u, v)

    def adjoint_matrix(self, u: FpVector) -> np.ndarray:
        """Matrix of ad u = [u, -]; column j holds the coordinates of [u, b_j]."""
        if u.field != self.field or len(u) != self.dim:
            raise ContractError(f"{u} is not a vector of {self.field}^{self.dim}")
        coords = np.array(u.digits, dtype=np.int64)
        return np.einsum("i,ijk->kj", coords, self.structure_tensor) % self.field.p

    def validate(self) -> AlgebraValidation:
        return validate(self)

    def __repr__(self) -> str:
        return f"BracketAlgebra({self.field}, names={list(self.names)})"


def validate(b: BracketAlgebra) -> AlgebraValidation:
    """Check the alternating law on the table and Jacobi on all basis triples."""
    n = b.dim
    alternating = all(b.structure[i][i].is_zero() for i in range(n)) and all(
        b.structure[j][i] == -b.structure[i][j]
        for i in range(n)
        for j in range(i + 1, n)
    )
    basis = [b.field.unit(n, i) for i in range(n)]
    jacobi = True
    for x, y, z in itertools.product(basis, repeat=3):
        total = (
            bracket_eval(b, x, bracket_eval(b, y, z))
            + bracket_eval(b, y, bracket_eval(b, z, x))
            + bracket_eval(b, z, bracket_eval(b, x, y))
        )
        if not total.is_zero():
            jacobi = False
            break
    return AlgebraValidation(alternating=alternating, jacobi=jacobi)


def bracket_eval(b: BracketAlgebra, u: FpVector, v: FpVector) -> FpVector:
    if len(u) != b.dim or len(v) != b.dim or u.field != b.field or v.field != b.field:
        raise ContractError(
            f"bracket arguments must be vectors of {b.field}^{b.dim}, got {u} and {v}"
        )
    coords = np.einsum(
        "i,j,ijk->k",
        np.array(u.digits, dtype=np.int64),
        np.array(v.digits, dtype=np.int64),
        b.structure_tensor,
    )
    return b.field.vector(coords.tolist())


def sl2(field: PrimeField) -> BracketAlgebra:
    """
    sl_2 over F_p in the basis (h, x+, x-):
    [h, x+] = 2x+, [h, x-] = -2x-, [x+, x-] = h.
    """
    if field.p == 2:
        raise UnsupportedFieldError(2)
    return BracketAlgebra.from_brackets(
        field,
        ("h", "x+", "x-"),
        {
            (0, 1): (0, 2, 0),
            (0, 2): (0, 0, -2),
            (1, 2): (1, 0, 0),
        },
    )


def sl2_h_free_subalgebra(field: PrimeField) -> Subspace:
    """
    The plane span{h + x+, -a*h + x-} with a = 1/4, a 2-dimensional subalgebra
    of sl_2 that does not contain h.
    """
    algebra = sl2(field)
    alpha = field.inv(4)
    return Subspace.span(
        field,
        3,
        [
            algebra.vector({"h": 1, "x+": 1}),
            algebra.vector({"h": -alpha, "x-": 1}),
        ],
    )


def _check_ambient(b: BracketAlgebra, s: Subspace) -> None:
    if s.field != b.field or s.ambient_dim != b.dim:
        raise ContractError(
            f"subspace of {s.field}^{s.ambient_dim} in an algebra over {b.field}^{b.dim}"
        )


def derived_subspace(b: BracketAlgebra, s: Subspace) -> Subspace:
    """span{[u, v] : u, v in s}, computed on basis pairs."""
    _check_ambient(b, s)
    return Subspace.span(
        b.field,
        b.dim,
        [bracket_eval(b, u, v) for u, v in itertools.product(s.basis, repeat=2)],
    )


def is_subalgebra(b: BracketAlgebra, s: Subspace) -> bool:
    _check_ambient(b, s)
    return all(
        bracket_eval(b, u, v) in s for u, v in itertools.product(s.basis, repeat=2)
    )


def subalgebras_of_dim(
    b: BracketAlgebra, k: int, cap: Optional[int] = None
) -> list[Subspace]:
    candidates = enumerate_subspaces(b.field, b.dim, k, cap=cap)
    found = [s for s in candidates if is_subalgebra(b, s)]
    logger.debug(
        f"{len(found)} of {len(candidates)} subspaces of dim {k} are subalgebras of {b}"
    )
    return found


def common_intersection(subspaces: Sequence[Subspace]) -> Subspace:
    if not subspaces:
        raise ContractError("common_intersection needs at least one subspace")
    return reduce(lambda a, c: a.intersect(c), subspaces[1:], subspaces[0])
