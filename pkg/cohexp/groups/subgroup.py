from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np
from loguru import logger

from cohexp.exceptions import CapExceededError, ContractError
from cohexp.groups.base import CODE_DTYPE, FiniteGroup, as_codes
from cohexp.settings import resolve_cap


class Subgroup:
    """
    A subgroup of a code-based finite group, held as its sorted element codes
    together with a generating set.
    """

    def __init__(
        self, parent: FiniteGroup, elements: np.ndarray, generators: Sequence[int]
    ) -> None:
        self.parent = parent
        self.elements = elements
        self.elements.setflags(write=False)
        self.generators = tuple(int(g) for g in generators)

    @classmethod
    def from_codes(
        cls, parent: FiniteGroup, codes: Iterable[int] | np.ndarray, generators: Sequence[int]
    ) -> "Subgroup":
        """Wrap a code set already known to be a subgroup (not re-verified)."""
        return cls(parent, as_codes(codes), generators)

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, np.array([parent.identity], dtype=CODE_DTYPE), ())

    @property
    def order(self) -> int:
        return int(self.elements.size)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.elements] = True
        return m

    def __contains__(self, code: int) -> bool:
        i = np.searchsorted(self.elements, code)
        return bool(i < self.elements.size and self.elements[i] == code)

    def issubset(self, other: "Subgroup") -> bool:
        return bool(np.isin(self.elements, other.elements, assume_unique=True).all())

    def intersect(self, other: "Subgroup") -> "Subgroup":
        _check_same_parent(self, other)
        common = np.intersect1d(self.elements, other.elements, assume_unique=True)
        return Subgroup(self.parent, common, common.tolist())

    def is_closed(self) -> bool:
        """Product and inverse closure, checked exhaustively."""
        e = self.elements
        products = self.parent.mul(e[:, None], e[None, :]).ravel()
        return bool(
            np.isin(products, e).all() and np.isin(self.parent.inv(e), e).all()
        )

    def exponent(self) -> int:
        orders = np.unique(self.parent.element_orders(self.elements))
        return math.lcm(*(int(o) for o in orders))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent == self.parent
            and np.array_equal(other.elements, self.elements)
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.elements.tobytes()))

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} index={self.index} of {self.parent!r}>"


def _check_same_parent(*subgroups: Subgroup) -> None:
    parent = subgroups[0].parent
    for h in subgroups[1:]:
        if h.parent != parent:
            raise ContractError(f"subgroups of {h.parent!r} and {parent!r} do not mix")


def closure(
    parent: FiniteGroup, generators: Iterable[int] | np.ndarray, cap: Optional[int] = None
) -> Subgroup:
    """
    Smallest subgroup containing the generators.

    Worklist saturation: the frontier of newly found elements is multiplied by
    every generator on both sides until nothing new appears. Membership is a
    dense boolean mask over the parent's codes.

    Raises:
        CapExceededError: If the subgroup grows past the cap.
    """
    limit = resolve_cap(cap, "enumeration_cap")
    gens = as_codes(generators)
    if gens.size and (gens.min() < 0 or gens.max() >= parent.order):
        raise ContractError(f"generator codes outside {parent!r}")
    mask = np.zeros(parent.order, dtype=bool)
    frontier = np.union1d(gens, [parent.identity]).astype(CODE_DTYPE)
    mask[frontier] = True
    found = int(frontier.size)
    while frontier.size and gens.size:
        products = np.concatenate(
            [
                parent.mul(frontier[:, None], gens[None, :]).ravel(),
                parent.mul(gens[None, :], frontier[:, None]).ravel(),
            ]
        )
        products = np.unique(products)
        frontier = products[~mask[products]]
        mask[frontier] = True
        found += int(frontier.size)
        if found > limit:
            raise CapExceededError(f"closure in {parent!r}", found, limit)
    elements = np.nonzero(mask)[0].astype(CODE_DTYPE)
    logger.debug(f"closure of {gens.size} generators in {parent!r}: {elements.size} elements")
    return Subgroup(parent, elements, gens.tolist())


def intersection_of(subgroups: Sequence[Subgroup]) -> Subgroup:
    """Set-wise intersection of a nonempty family."""
    if not subgroups:
        raise ContractError("intersection of an empty family")
    _check_same_parent(*subgroups)
    mask = reduce(lambda m, h: m & h.mask, subgroups[1:], subgroups[0].mask)
    codes = np.nonzero(mask)[0]
    return Subgroup(subgroups[0].parent, codes.astype(CODE_DTYPE), codes.tolist())
