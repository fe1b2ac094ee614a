from __future__ import annotations

import math
from typing import Optional, Sequence

from loguru import logger
from pydantic import BaseModel, Field

from cohexp.cohom.complexes import (
    CochainComplexDescriptor,
    abelian_cochain,
    bar_cochain,
    periodic_cochain,
)
from cohexp.cohom.exceptions import InsufficientDegreesError
from cohexp.cohom.snf import elementary_divisors
from cohexp.exceptions import ContractError
from cohexp.groups import TableGroup
from cohexp.settings import get_verify_settings
from cohexp.utils.parallel import thread_map


class AbelianGroupInvariants(BaseModel):
    """A finitely generated abelian group Z^r x Z/d1 x ... x Z/dk with d1 | d2 | ..."""

    free_rank: int = Field(default=0, ge=0)
    divisors: list[int] = Field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.divisors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def exponent(self) -> Optional[int]:
        """lcm of the torsion divisors; None when the group is infinite."""
        if not self.is_finite:
            return None
        return math.lcm(*self.divisors) if self.divisors else 1

    @property
    def order(self) -> Optional[int]:
        return math.prod(self.divisors) if self.is_finite else None

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.divisors)
        return " x ".join(parts) or "0"


class DegreeCohomology(BaseModel):
    degree: int
    group: AbelianGroupInvariants

    @property
    def exponent(self) -> Optional[int]:
        return self.group.exponent


class CohomologyReport(BaseModel):
    name: str
    group_order: Optional[int] = None
    max_degree: int
    degrees: list[DegreeCohomology] = Field(default_factory=list)

    def at(self, n: int) -> AbelianGroupInvariants:
        if not 0 <= n <= self.max_degree:
            raise InsufficientDegreesError(n, self.max_degree)
        return self.degrees[n].group

    def exponents(self) -> list[Optional[int]]:
        return [d.exponent for d in self.degrees]

    def annihilated_by_order(self) -> bool:
        """Positive degrees finite with every divisor dividing |G|."""
        if self.group_order is None:
            raise ContractError(f"{self.name}: no group order recorded")
        return all(
            d.group.is_finite and all(self.group_order % x == 0 for x in d.group.divisors)
            for d in self.degrees[1:]
        )


def _nonunit(divisors: Sequence[int]) -> list[int]:
    return [d for d in divisors if d != 1]


def cohomology(
    c: CochainComplexDescriptor, threads: Optional[int] = None
) -> CohomologyReport:
    """
    H^n = ker d^n / im d^(n-1) for n = 0 .. N.

    The torsion of H^n is given by the non-unit invariant factors of d^(n-1),
    and its free rank is rank C^n - rank d^n - rank d^(n-1). The invariant
    factors of the differentials are independent and may be computed on
    several threads.

    Raises:
        NotAComplexError: If d^(n+1) d^n != 0 for some n.
    """
    c.check()
    workers = get_verify_settings().threads if threads is None else threads
    divisors = thread_map(elementary_divisors, list(c.differentials), workers)
    degrees = []
    for n in range(c.max_degree + 1):
        incoming = divisors[n - 1] if n else []
        free = c.rank(n) - len(divisors[n]) - len(incoming)
        degrees.append(
            DegreeCohomology(
                degree=n,
                group=AbelianGroupInvariants(free_rank=free, divisors=_nonunit(incoming)),
            )
        )
    report = CohomologyReport(
        name=c.name, group_order=c.group_order, max_degree=c.max_degree, degrees=degrees
    )
    logger.debug(
        f"cohomology of {c.name}: "
        + ", ".join(f"H^{d.degree}={d.group}" for d in report.degrees)
    )
    return report


def e_lowdeg(report: CohomologyReport, n: int) -> int:
    """
    lcm of the exponents of H^1 .. H^n. This divides e(G) and is never
    claimed to equal it. An empty range gives 1.

    Raises:
        InsufficientDegreesError: If the report stops before degree n.
        ContractError: If some H^k in range is infinite.
    """
    if n > report.max_degree:
        raise InsufficientDegreesError(n, report.max_degree)
    exponents = []
    for d in report.degrees[1 : n + 1]:
        if d.exponent is None:
            raise ContractError(f"{report.name}: H^{d.degree} = {d.group} is infinite")
        exponents.append(d.exponent)
    return math.lcm(*exponents) if exponents else 1


def cohomology_of_group(
    group: TableGroup | Sequence[int],
    max_degree: int,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
) -> CohomologyReport:
    """
    Choose the engine from the shape of the input: one cyclic factor goes to
    the periodic complex, several factors to the tensor complex, and an
    explicit multiplication table to the normalized bar complex.
    """
    if isinstance(group, TableGroup):
        complex_ = bar_cochain(group, max_degree, rank_cap=cap)
    else:
        factors = list(group)
        if len(factors) == 1:
            complex_ = periodic_cochain(factors[0], max_degree)
        else:
            complex_ = abelian_cochain(factors, max_degree, cap=cap)
    return cohomology(complex_, threads=threads)
