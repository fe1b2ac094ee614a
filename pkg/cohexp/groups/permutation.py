from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from loguru import logger

from cohexp.exceptions import CapExceededError, ContractError, check_cap
from cohexp.fpla import is_prime
from cohexp.settings import resolve_cap

PERM_DTYPE = np.int16


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., d-1}; ``images[i]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ContractError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self * other = self after other, so (g*h)(i) = g(h(i))."""
        if other.degree != self.degree:
            raise ContractError(f"degrees {self.degree} and {other.degree} differ")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.degree
        lengths = []
        for start in range(self.degree):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = self.images[i]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if self.degree else 1


class PermGroup:
    """
    A permutation group given by generators; ``materialize`` enumerates it.
    Elements are stored as rows of an int16 array, sorted lexicographically.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], name: str = "") -> None:
        for g in generators:
            if g.degree != degree:
                raise ContractError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.name = name or f"<{len(generators)} generators on {degree} points>"
        self._elements: Optional[np.ndarray] = None

    def __repr__(self) -> str:
        return self.name

    def materialize(self, cap: Optional[int] = None) -> np.ndarray:
        if self._elements is not None:
            return self._elements
        limit = resolve_cap(cap, "enumeration_cap")
        identity = np.arange(self.degree, dtype=PERM_DTYPE)
        gens = np.array([g.images for g in self.generators], dtype=PERM_DTYPE).reshape(
            -1, self.degree
        )
        seen = {identity.tobytes()}
        rows = [identity]
        frontier = np.vstack([identity[None, :], gens])
        for row in gens:
            if row.tobytes() not in seen:
                seen.add(row.tobytes())
                rows.append(row)
        while frontier.shape[0] and gens.shape[0]:
            # gen after f and f after gen
            candidates = np.concatenate(
                [
                    gens[:, frontier].reshape(-1, self.degree),
                    frontier[:, gens].reshape(-1, self.degree),
                ]
            )
            fresh = []
            for row in candidates:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
            if len(seen) > limit:
                raise CapExceededError(f"elements of {self!r}", len(seen), limit)
            rows.extend(fresh)
            frontier = np.array(fresh, dtype=PERM_DTYPE).reshape(-1, self.degree)
        elements = np.array(rows, dtype=PERM_DTYPE)
        order = np.lexsort(elements.T[::-1])
        self._elements = elements[order]
        self._elements.setflags(write=False)
        logger.debug(f"materialized {self!r}: {len(rows)} elements")
        return self._elements

    def order(self, cap: Optional[int] = None) -> int:
        return int(self.materialize(cap).shape[0])

    def element_orders(self, cap: Optional[int] = None) -> np.ndarray:
        elements = self.materialize(cap).astype(np.int64)
        identity = np.arange(self.degree)
        orders = np.zeros(elements.shape[0], dtype=np.int64)
        current = elements.copy()
        k = 1
        while True:
            done = (current == identity).all(axis=1) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                return orders
            current = np.take_along_axis(elements, current, axis=1)
            k += 1

    def exponent(self, cap: Optional[int] = None) -> int:
        return math.lcm(*(int(o) for o in np.unique(self.element_orders(cap))))

    def contains(self, g: Permutation, cap: Optional[int] = None) -> bool:
        target = np.array(g.images, dtype=PERM_DTYPE)
        return bool((self.materialize(cap) == target).all(axis=1).any())


def sylow_order_valuation(p: int, m: int) -> int:
    """v_p(m!) by Legendre's formula."""
    total, power = 0, p
    while power <= m:
        total += m // power
        power *= p
    return total


def wreath_sylow(p: int, n: int, cap: Optional[int] = None) -> PermGroup:
    """
    The Sylow p-subgroup S(p^n) of Sym(p^n) for n in {1, 2}.

    Points are numbered block * p + offset. For n = 1 it is the cyclic shift;
    for n = 2 it is generated by one p-cycle inside each of the p blocks and a
    shift permuting the blocks, i.e. the wreath product of Z/p with Z/p.

    Raises:
        ContractError: For n outside {1, 2} or p not a prime <= 7.
        CapExceededError: If p^((p^n - 1)/(p - 1)) exceeds the cap.
    """
    if n not in (1, 2):
        raise ContractError(f"wreath_sylow supports n in {{1, 2}}, got {n}")
    if not is_prime(p) or p > 7:
        raise ContractError(f"wreath_sylow needs a prime p <= 7, got {p}")
    degree = p**n
    expected = p ** sylow_order_valuation(p, degree)
    check_cap(f"S({degree})", expected, resolve_cap(cap, "enumeration_cap"))
    if n == 1:
        generators = [Permutation.from_cycles(degree, [list(range(p))])]
    else:
        generators = [
            Permutation.from_cycles(degree, [[block * p + i for i in range(p)]])
            for block in range(p)
        ]
        generators.append(
            Permutation(tuple(((i // p + 1) % p) * p + i % p for i in range(degree)))
        )
    group = PermGroup(degree, generators, name=f"S({degree})")
    group.materialize(cap)
    return group
