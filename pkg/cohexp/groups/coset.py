from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from loguru import logger

from cohexp.exceptions import ContractError, check_cap
from cohexp.groups.base import CODE_DTYPE, FiniteGroup
from cohexp.groups.permutation import PERM_DTYPE, Permutation
from cohexp.groups.subgroup import Subgroup
from cohexp.settings import resolve_cap


@dataclass(frozen=True, eq=False)
class CosetAction:
    """
    The left action of a group on the left cosets gH of a subgroup.

    Cosets are numbered by their smallest element code, so the permutation
    attached to an element is the same on every run. ``table[g, i]`` is the
    number of the coset g * (coset i).
    """

    group: FiniteGroup
    subgroup: Subgroup
    representatives: np.ndarray
    labels: np.ndarray
    table: np.ndarray

    @property
    def degree(self) -> int:
        return int(self.representatives.size)

    def cosets(self) -> list[np.ndarray]:
        return [np.nonzero(self.labels == i)[0] for i in range(self.degree)]

    def image(self, g: int) -> Permutation:
        return Permutation(tuple(int(i) for i in self.table[g]))

    def moved_mask(self) -> np.ndarray:
        """True for every element acting nontrivially."""
        return (self.table != np.arange(self.degree, dtype=PERM_DTYPE)).any(axis=1)

    def kernel(self) -> np.ndarray:
        return np.nonzero(~self.moved_mask())[0].astype(CODE_DTYPE)

    def is_homomorphism(self, left: np.ndarray, right: np.ndarray) -> bool:
        """phi(gh) == phi(g) after phi(h) on the given pairs (g, h)."""
        products = self.group.mul(left, right)
        composed = np.take_along_axis(
            self.table[left].astype(np.int64), self.table[right].astype(np.int64), axis=1
        )
        return bool(np.array_equal(self.table[products], composed))

    def image_rows(self) -> np.ndarray:
        """The distinct permutations in the image, as sorted rows."""
        return np.unique(self.table, axis=0)

    def image_orders(self) -> np.ndarray:
        """Orders of the distinct image permutations, by repeated composition."""
        rows = self.image_rows().astype(np.int64)
        identity = np.arange(self.degree, dtype=np.int64)
        orders = np.zeros(rows.shape[0], dtype=np.int64)
        current = rows.copy()
        k = 1
        while True:
            done = (current == identity).all(axis=1) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                return orders
            current = np.take_along_axis(rows, current, axis=1)
            k += 1

    def image_exponent(self) -> int:
        return math.lcm(*(int(o) for o in np.unique(self.image_orders())))


def coset_action(
    group: FiniteGroup, subgroup: Subgroup, cap: Optional[int] = None
) -> CosetAction:
    """
    Permutation representation on the left cosets of ``subgroup``.

    Raises:
        ContractError: If the subgroup lives in another group.
        CapExceededError: If the index exceeds the coset degree cap.
    """
    if subgroup.parent != group:
        raise ContractError(f"{subgroup!r} is not a subgroup of {group!r}")
    index = group.order // subgroup.order
    check_cap("coset action degree", index, resolve_cap(cap, "coset_degree_cap"))
    labels = np.full(group.order, -1, dtype=np.int64)
    representatives = []
    while True:
        unlabelled = np.flatnonzero(labels < 0)
        if unlabelled.size == 0:
            break
        g = int(unlabelled[0])
        labels[group.mul(np.int64(g), subgroup.elements)] = len(representatives)
        representatives.append(g)
    reps = np.array(representatives, dtype=CODE_DTYPE)
    codes = np.arange(group.order, dtype=CODE_DTYPE)
    table = labels[group.mul(codes[:, None], reps[None, :])].astype(PERM_DTYPE)
    logger.debug(f"coset action of {group!r} on {index} cosets of {subgroup!r}")
    return CosetAction(group, subgroup, reps, labels, table)
