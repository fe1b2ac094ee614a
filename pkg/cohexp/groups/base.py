from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import Iterable, Optional

import numpy as np

from cohexp.exceptions import ContractError, check_cap
from cohexp.settings import resolve_cap

CODE_DTYPE = np.int64


class FiniteGroup(ABC):
    """
    A finite group whose elements are the integer codes 0 .. order-1.

    Subclasses supply vectorised ``mul`` and ``inv`` on numpy arrays of codes;
    everything else (powers, commutators, orders, closures, centres) is built
    on those two.
    """

    @property
    @abstractmethod
    def order(self) -> int:
        ...

    @property
    @abstractmethod
    def identity(self) -> int:
        ...

    @abstractmethod
    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Elementwise product x*y with numpy broadcasting."""
        ...

    @abstractmethod
    def inv(self, x: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def generators(self) -> np.ndarray:
        """Some generating set of the whole group."""
        ...

    def codes(self, cap: Optional[int] = None) -> np.ndarray:
        check_cap(
            f"elements of {self!r}", self.order, resolve_cap(cap, "enumeration_cap")
        )
        return np.arange(self.order, dtype=CODE_DTYPE)

    def pow(self, x: np.ndarray, k: int) -> np.ndarray:
        x = np.asarray(x, dtype=CODE_DTYPE)
        if k < 0:
            x, k = self.inv(x), -k
        result = np.full_like(x, self.identity)
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def commutator(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """x^-1 y^-1 x y."""
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def element_orders(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=CODE_DTYPE)
        orders = np.zeros(x.shape, dtype=np.int64)
        current = x.copy()
        k = 1
        while True:
            done = (current == self.identity) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                return orders
            if k > self.order:
                raise ContractError(f"{self!r}: element order exceeds group order")
            current = self.mul(current, x)
            k += 1

    def exponent(self, cap: Optional[int] = None) -> int:
        """lcm of all element orders, over a full enumeration."""
        orders = np.unique(self.element_orders(self.codes(cap)))
        return math.lcm(*(int(o) for o in orders))

    def center_mask(self, cap: Optional[int] = None) -> np.ndarray:
        everything = self.codes(cap)
        mask = np.ones(self.order, dtype=bool)
        for g in self.generators():
            mask &= self.mul(everything, g) == self.mul(g, everything)
        return mask


def as_codes(values: Iterable[int] | np.ndarray) -> np.ndarray:
    """Sorted, duplicate-free code array."""
    if not isinstance(values, np.ndarray):
        values = np.fromiter((int(v) for v in values), dtype=CODE_DTYPE)
    return np.unique(values.astype(CODE_DTYPE).ravel())
