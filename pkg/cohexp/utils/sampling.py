from dataclasses import dataclass

import numpy as np
from loguru import logger


@dataclass(frozen=True)
class PairSweep:
    """Index pairs (left[i], right[i]) to check, and whether they are all of them."""

    left: np.ndarray
    right: np.ndarray
    exhaustive: bool

    @property
    def size(self) -> int:
        return int(self.left.size)

    def describe(self) -> str:
        kind = "exhaustive" if self.exhaustive else "sampled"
        return f"{kind}, {self.size} pairs"


def pair_sweep(
    size: int, budget: int, samples: int, rng: np.random.Generator
) -> PairSweep:
    """
    All size^2 pairs when that fits the budget, otherwise ``samples`` uniform
    pairs drawn from ``rng``.
    """
    if size * size <= budget:
        idx = np.arange(size, dtype=np.int64)
        return PairSweep(np.repeat(idx, size), np.tile(idx, size), True)
    logger.warning(f"{size}^2 pairs exceed the sweep budget {budget}; sampling {samples}")
    return PairSweep(
        rng.integers(0, size, samples, dtype=np.int64),
        rng.integers(0, size, samples, dtype=np.int64),
        False,
    )
