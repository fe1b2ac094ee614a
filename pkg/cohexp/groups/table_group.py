from __future__ import annotations

import itertools
from typing import Optional, Sequence

import numpy as np

from cohexp.exceptions import ContractError
from cohexp.groups.base import CODE_DTYPE, FiniteGroup


class TableGroup(FiniteGroup):
    """
    A finite group given by its multiplication table on labels 0 .. n-1.

    The constructor checks closure, associativity, a two-sided identity and
    inverses, so a TableGroup is always a group.
    """

    def __init__(self, table: Sequence[Sequence[int]] | np.ndarray, name: str = "table") -> None:
        t = np.asarray(table, dtype=CODE_DTYPE)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ContractError(f"multiplication table must be square and nonempty, got {t.shape}")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise ContractError(f"table entries must lie in 0..{n - 1}")
        everything = np.arange(n)
        identities = [
            e
            for e in range(n)
            if np.array_equal(t[e], everything) and np.array_equal(t[:, e], everything)
        ]
        if not identities:
            raise ContractError("table has no two-sided identity")
        # (ab)c == a(bc) for all triples
        left = t[t[:, :, None], everything[None, None, :]]
        right = t[everything[:, None, None], t[None, :, :]]
        if not np.array_equal(left, right):
            raise ContractError("table is not associative")
        identity = identities[0]
        inverse = np.argmax(t == identity, axis=1)
        if not (t[everything, inverse] == identity).all():
            raise ContractError("some element has no inverse")
        self.table = t
        self.table.setflags(write=False)
        self.name = name
        self._identity = int(identity)
        self._inverse = inverse.astype(CODE_DTYPE)

    def __repr__(self) -> str:
        return self.name

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TableGroup) and np.array_equal(other.table, self.table)

    def __hash__(self) -> int:
        return hash(("TableGroup", self.table.tobytes()))

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return self._identity

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.table[x, y]

    def inv(self, x: np.ndarray) -> np.ndarray:
        return self._inverse[x]

    def generators(self) -> np.ndarray:
        return np.arange(self.order, dtype=CODE_DTYPE)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def nonidentity(self) -> list[int]:
        return [g for g in range(self.order) if g != self._identity]


def cyclic_table(m: int) -> TableGroup:
    if m < 1:
        raise ContractError(f"cyclic group order must be positive, got {m}")
    x = np.arange(m)
    return TableGroup((x[:, None] + x[None, :]) % m, name=f"Z/{m}")


def abelian_table(factors: Sequence[int], name: Optional[str] = None) -> TableGroup:
    """
    Z/m1 x ... x Z/mk with mixed-radix labels, the first factor most significant.
    """
    if not factors or any(m < 1 for m in factors):
        raise ContractError(f"factors must be positive, got {list(factors)}")
    tuples = list(itertools.product(*(range(m) for m in factors)))
    label = {t: i for i, t in enumerate(tuples)}
    table = [
        [label[tuple((a + b) % m for a, b, m in zip(s, t, factors))] for t in tuples]
        for s in tuples
    ]
    return TableGroup(table, name=name or " x ".join(f"Z/{m}" for m in factors))


def direct_product(g: TableGroup, h: TableGroup) -> TableGroup:
    """Labels (a, b) -> a * |H| + b."""
    n, m = g.order, h.order
    a = np.arange(n)[:, None, None, None]
    b = np.arange(m)[None, :, None, None]
    c = np.arange(n)[None, None, :, None]
    d = np.arange(m)[None, None, None, :]
    product = g.table[a, c] * m + h.table[b, d]
    return TableGroup(product.reshape(n * m, n * m), name=f"{g.name} x {h.name}")
