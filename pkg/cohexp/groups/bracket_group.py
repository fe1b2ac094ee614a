from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np
from loguru import logger

from cohexp.bracket import BracketAlgebra
from cohexp.exceptions import ContractError, check_cap
from cohexp.fpla import FpVector, vector_from_index
from cohexp.groups.base import CODE_DTYPE, FiniteGroup
from cohexp.groups.subgroup import Subgroup, closure
from cohexp.settings import resolve_cap


class BracketGroup(FiniteGroup):
    """
    The central extension 1 -> W -> G -> V -> 1 attached to a bracket algebra.

    Elements are pairs (a, s) with a, s in F_p^n, multiplied by

        (a, s)(b, t) = (a + b, s + t + c(a, b)),
        c(a, b) = [a, b]/2 + carry(a, b),

    where carry(a, b)_i = 1 exactly when a_i + b_i >= p on representatives in
    {0, ..., p-1}. The bracket term makes commutators equal brackets and the
    carry term makes (a, s)^p = (0, a), so the p-power map is the identity
    V -> W.

    An element is coded as index(a) * p^n + index(s), with index the base-p
    encoding of ``cohexp.fpla.vector_index``.
    """

    def __init__(self, algebra: BracketAlgebra, cap: Optional[int] = None) -> None:
        self.algebra = algebra
        self.field = algebra.field
        self.p = algebra.field.p
        self.n = algebra.dim
        self.half = algebra.field.half
        self.q = self.p**self.n
        self._cap = resolve_cap(cap, "enumeration_cap")

    def __repr__(self) -> str:
        return f"G({', '.join(self.algebra.names)} over F{self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BracketGroup) and other.algebra == self.algebra

    def __hash__(self) -> int:
        return hash(("BracketGroup", self.algebra))

    @property
    def order(self) -> int:
        return self.q * self.q

    @property
    def identity(self) -> int:
        return 0

    def order_of_group(self, cross_check: bool = True) -> int:
        """
        p^(2n). With ``cross_check`` the generated subgroup of the basis lifts
        is enumerated and must be the whole group (skipped above the cap).
        """
        analytic = self.p ** (2 * self.n)
        if cross_check and analytic <= self._cap:
            enumerated = closure(self, self.generators(), cap=self._cap).order
            if enumerated != analytic:
                raise ContractError(
                    f"{self!r}: basis lifts generate {enumerated} elements, expected {analytic}"
                )
        return analytic

    @cached_property
    def _weights(self) -> np.ndarray:
        return self.p ** np.arange(self.n - 1, -1, -1, dtype=CODE_DTYPE)

    @cached_property
    def _digits(self) -> np.ndarray:
        idx = np.arange(self.q, dtype=CODE_DTYPE)
        return (idx[:, None] // self._weights[None, :]) % self.p

    @cached_property
    def _bracket_digits(self) -> np.ndarray:
        check_cap(f"bracket table of {self!r}", self.q * self.q, self._cap)
        d = self._digits
        return np.einsum("ai,bj,ijk->abk", d, d, self.algebra.structure_tensor) % self.p

    @cached_property
    def bracket_table(self) -> np.ndarray:
        """V-index of [a, b] for V-indices a, b."""
        return self._bracket_digits @ self._weights

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(add, neg, cocycle) tables on V-indices."""
        check_cap(f"cocycle table of {self!r}", self.q * self.q, self._cap)
        p, d, w = self.p, self._digits, self._weights
        pair_sum = d[:, None, :] + d[None, :, :]
        add = (pair_sum % p) @ w
        neg = ((-d) % p) @ w
        brackets = self._bracket_digits
        carry = (pair_sum >= p).astype(CODE_DTYPE)
        cocycle = ((self.half * brackets + carry) % p) @ w
        logger.debug(f"built {self.q}x{self.q} arithmetic tables for {self!r}")
        return add, neg, cocycle

    @property
    def add_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def neg_table(self) -> np.ndarray:
        return self._tables[1]

    @property
    def cocycle_table(self) -> np.ndarray:
        return self._tables[2]

    def split(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Codes -> (V-index, W-index)."""
        return np.divmod(np.asarray(x, dtype=CODE_DTYPE), self.q)

    def join(self, a: np.ndarray, s: np.ndarray) -> np.ndarray:
        return np.asarray(a, dtype=CODE_DTYPE) * self.q + s

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        add, _, cocycle = self._tables
        a, s = self.split(x)
        b, t = self.split(y)
        return self.join(add[a, b], add[add[s, t], cocycle[a, b]])

    def inv(self, x: np.ndarray) -> np.ndarray:
        add, neg, cocycle = self._tables
        a, s = self.split(x)
        minus_a = neg[a]
        return self.join(minus_a, neg[add[s, cocycle[a, minus_a]]])

    def generators(self) -> np.ndarray:
        """Lifts (e_i, 0) of the basis of V; their p-th powers fill W."""
        return np.array(
            [self.join(self.field.unit(self.n, i).index, 0) for i in range(self.n)],
            dtype=CODE_DTYPE,
        )

    def element(self, a: FpVector, s: Optional[FpVector] = None) -> "GroupElement":
        for v in (a, s):
            if v is not None and (v.field != self.field or len(v) != self.n):
                raise ContractError(f"{v} is not a vector of {self.field}^{self.n}")
        return GroupElement(self, int(self.join(a.index, s.index if s is not None else 0)))

    def lift(self, a: FpVector) -> "GroupElement":
        return self.element(a)

    def from_code(self, code: int) -> "GroupElement":
        if not 0 <= code < self.order:
            raise ContractError(f"code {code} outside {self!r}")
        return GroupElement(self, int(code))

    def elements(self) -> list["GroupElement"]:
        return [GroupElement(self, int(c)) for c in self.codes(self._cap)]

    def cocycle(self, a: FpVector, b: FpVector) -> FpVector:
        return vector_from_index(self.field, self.n, int(self.cocycle_table[a.index, b.index]))

    def _check_parent(self, *elements: "GroupElement") -> None:
        for g in elements:
            if g.group != self:
                raise ContractError(f"{g} belongs to {g.group!r}, not {self!r}")

    def multiply(self, g: "GroupElement", h: "GroupElement") -> "GroupElement":
        self._check_parent(g, h)
        return GroupElement(self, int(self.mul(np.int64(g.code), np.int64(h.code))))

    def inverse(self, g: "GroupElement") -> "GroupElement":
        self._check_parent(g)
        return GroupElement(self, int(self.inv(np.int64(g.code))))

    def power(self, g: "GroupElement", k: int) -> "GroupElement":
        self._check_parent(g)
        return GroupElement(self, int(self.pow(np.array(g.code), k)))

    def commutator_of(self, g: "GroupElement", h: "GroupElement") -> "GroupElement":
        """g^-1 h^-1 g h; always lands in W."""
        self._check_parent(g, h)
        return GroupElement(
            self, int(self.commutator(np.int64(g.code), np.int64(h.code)))
        )

    def element_order(self, g: "GroupElement") -> int:
        self._check_parent(g)
        return int(self.element_orders(np.array([g.code]))[0])

    def group_exponent(self) -> int:
        return self.exponent(self._cap)

    def closure(self, generators: Iterable["GroupElement"]) -> Subgroup:
        gens = list(generators)
        self._check_parent(*gens)
        return closure(self, [g.code for g in gens], cap=self._cap)

    def w_subgroup(self) -> Subgroup:
        """W = {(0, s)}."""
        return Subgroup.from_codes(
            self,
            np.arange(self.q, dtype=CODE_DTYPE),
            generators=[self.join(0, self.field.unit(self.n, i).index) for i in range(self.n)],
        )

    def preimage(self, v_indices: np.ndarray, generators: Iterable[int]) -> Subgroup:
        """{(a, s) : a in the given set of V-indices}, which must be a subgroup of V."""
        a = np.asarray(v_indices, dtype=CODE_DTYPE)
        codes = (a[:, None] * self.q + np.arange(self.q, dtype=CODE_DTYPE)[None, :]).ravel()
        return Subgroup.from_codes(self, codes, generators=list(generators))

    def center(self) -> Subgroup:
        codes = np.nonzero(self.center_mask(self._cap))[0]
        return Subgroup.from_codes(self, codes, generators=codes.tolist())


@dataclass(frozen=True)
class GroupElement:
    group: BracketGroup
    code: int

    @property
    def a(self) -> FpVector:
        """Image in V."""
        return vector_from_index(self.group.field, self.group.n, self.code // self.group.q)

    @property
    def s(self) -> FpVector:
        """W-coordinate."""
        return vector_from_index(self.group.field, self.group.n, self.code % self.group.q)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.multiply(self, other)

    def __pow__(self, k: int) -> "GroupElement":
        return self.group.power(self, k)

    def inverse(self) -> "GroupElement":
        return self.group.inverse(self)

    def is_identity(self) -> bool:
        return self.code == self.group.identity

    def __repr__(self) -> str:
        return f"({self.a!r}, {self.s!r})"
