from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from loguru import logger

from cohexp.cohom.exceptions import NotAComplexError
from cohexp.cohom.matrix import IntegerMatrix
from cohexp.exceptions import ContractError, check_cap
from cohexp.groups import TableGroup
from cohexp.settings import resolve_cap


@dataclass(frozen=True, eq=False)
class CochainComplexDescriptor:
    """
    Cochain groups C^0 .. C^(N+1), each free of the given rank, and the
    differentials d^n : C^n -> C^(n+1) for n = 0 .. N as integer matrices of
    shape (rank C^(n+1), rank C^n). Degree N+1 is carried only so that H^N
    can be computed.
    """

    name: str
    max_degree: int
    ranks: tuple[int, ...]
    differentials: tuple[IntegerMatrix, ...]
    group_order: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise ContractError(f"max degree must be >= 0, got {self.max_degree}")
        if len(self.ranks) != self.max_degree + 2 or len(self.differentials) != self.max_degree + 1:
            raise ContractError(
                f"{self.name}: need {self.max_degree + 2} ranks and "
                f"{self.max_degree + 1} differentials"
            )
        for n, d in enumerate(self.differentials):
            if d.shape != (self.ranks[n + 1], self.ranks[n]):
                raise NotAComplexError(
                    n, f"d^{n} has shape {d.shape}, expected {(self.ranks[n + 1], self.ranks[n])}"
                )

    def rank(self, n: int) -> int:
        return self.ranks[n]

    def differential(self, n: int) -> IntegerMatrix:
        return self.differentials[n]

    def check(self) -> None:
        """
        Raises:
            NotAComplexError: At the first n with d^(n+1) d^n != 0.
        """
        for n in range(self.max_degree):
            if not (self.differentials[n + 1] @ self.differentials[n]).is_zero():
                raise NotAComplexError(n)


def periodic_cochain(m: int, max_degree: int) -> CochainComplexDescriptor:
    """
    Hom(P, Z) for the periodic resolution P of Z over Z[Z/m].

    Every C^n is Z; d^n is 0 for n even (dual of g - 1) and m for n odd
    (dual of the norm element).
    """
    if m < 2:
        raise ContractError(f"cyclic order must be >= 2, got {m}")
    if max_degree < 0:
        raise ContractError(f"max degree must be >= 0, got {max_degree}")
    differentials = tuple(
        IntegerMatrix(1, 1, {(0, 0): m if n % 2 else 0}) for n in range(max_degree + 1)
    )
    return CochainComplexDescriptor(
        name=f"Z/{m}",
        max_degree=max_degree,
        ranks=(1,) * (max_degree + 2),
        differentials=differentials,
        group_order=m,
    )


def weak_compositions(n: int, k: int) -> list[tuple[int, ...]]:
    """Tuples of k naturals summing to n, in lexicographic order."""
    if k == 1:
        return [(n,)]
    return [
        (first,) + rest for first in range(n + 1) for rest in weak_compositions(n - first, k - 1)
    ]


def abelian_cochain(
    factors: Sequence[int], max_degree: int, cap: Optional[int] = None
) -> CochainComplexDescriptor:
    """
    Tensor product of the periodic complexes of Z/m1, ..., Z/mk.

    A basis cochain of degree n is a weak composition (i1, ..., ik) of n. Its
    coboundary raises one index i_j by one with coefficient
    (-1)^(i1 + ... + i_(j-1)) times the periodic differential of factor j.

    Raises:
        ContractError: If some factor is < 2.
        CapExceededError: If rank C^(N+1) exceeds ``cochain_rank_cap``.
    """
    factors = list(factors)
    if not factors or any(m < 2 for m in factors):
        raise ContractError(f"factors must all be >= 2, got {factors}")
    if max_degree < 0:
        raise ContractError(f"max degree must be >= 0, got {max_degree}")
    k = len(factors)
    top = math.comb(max_degree + 1 + k - 1, k - 1)
    check_cap("tensor cochain rank", top, resolve_cap(cap, "cochain_rank_cap"))

    bases = [weak_compositions(n, k) for n in range(max_degree + 2)]
    differentials = []
    for n in range(max_degree + 1):
        target = {c: r for r, c in enumerate(bases[n + 1])}
        triplets = []
        for col, source in enumerate(bases[n]):
            sign = 1
            for j, (i, m) in enumerate(zip(source, factors)):
                if i % 2:
                    raised = source[:j] + (i + 1,) + source[j + 1 :]
                    triplets.append((target[raised], col, sign * m))
                    sign = -sign
        differentials.append(
            IntegerMatrix.from_triplets(len(bases[n + 1]), len(bases[n]), triplets)
        )
    complex_ = CochainComplexDescriptor(
        name=" x ".join(f"Z/{m}" for m in factors),
        max_degree=max_degree,
        ranks=tuple(len(b) for b in bases),
        differentials=tuple(differentials),
        group_order=math.prod(factors),
    )
    logger.debug(f"tensor complex for {complex_.name}: ranks {complex_.ranks}")
    return complex_


def bar_cochain(
    group: TableGroup,
    max_degree: int,
    order_cap: Optional[int] = None,
    rank_cap: Optional[int] = None,
) -> CochainComplexDescriptor:
    """
    Normalized bar cochains of a small group with trivial integer coefficients.

    C^n has a basis indexed by n-tuples of nonidentity elements and

        df(g1, ..., g(n+1)) = f(g2, ..., g(n+1))
                              + sum_i (-1)^i f(g1, ..., gi g(i+1), ..., g(n+1))
                              + (-1)^(n+1) f(g1, ..., gn),

    where terms containing the identity vanish.

    Raises:
        CapExceededError: If |G| exceeds ``bar_order_cap`` or (|G|-1)^(N+1)
            exceeds ``bar_rank_cap``.
    """
    if max_degree < 0:
        raise ContractError(f"max degree must be >= 0, got {max_degree}")
    check_cap("bar engine group order", group.order, resolve_cap(order_cap, "bar_order_cap"))
    others = group.nonidentity()
    r = len(others)
    check_cap("bar cochain rank", r ** (max_degree + 1), resolve_cap(rank_cap, "bar_rank_cap"))
    position = {g: i for i, g in enumerate(others)}
    table = group.table
    identity = group.identity

    def index(t: Sequence[int]) -> int:
        out = 0
        for g in t:
            out = out * r + position[g]
        return out

    differentials = []
    for n in range(max_degree + 1):
        triplets = []
        for row, t in enumerate(itertools.product(others, repeat=n + 1)):
            triplets.append((row, index(t[1:]), 1))
            for i in range(n):
                product = int(table[t[i], t[i + 1]])
                if product != identity:
                    merged = t[:i] + (product,) + t[i + 2 :]
                    triplets.append((row, index(merged), (-1) ** (i + 1)))
            triplets.append((row, index(t[:-1]), (-1) ** (n + 1)))
        differentials.append(IntegerMatrix.from_triplets(r ** (n + 1), r**n, triplets))
    logger.debug(f"bar complex for {group!r} through degree {max_degree + 1}")
    return CochainComplexDescriptor(
        name=group.name,
        max_degree=max_degree,
        ranks=tuple(r**n for n in range(max_degree + 2)),
        differentials=tuple(differentials),
        group_order=group.order,
    )
