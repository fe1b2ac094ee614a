from __future__ import annotations

from functools import reduce
from typing import Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from cohexp.exceptions import ContractError
from cohexp.groups import (
    CODE_DTYPE,
    CosetAction,
    FiniteGroup,
    Subgroup,
    coset_action,
    intersection_of,
)
from cohexp.lattice.exceptions import HypothesisFailedError
from cohexp.settings import get_verify_settings, resolve_cap
from cohexp.utils.parallel import thread_map
from cohexp.utils.sampling import PairSweep, pair_sweep


def _is_prime_power(n: int) -> bool:
    if n == 1:
        return True
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


class MemberImage(BaseModel):
    """What the coset action on one family member looks like."""

    subgroup_order: int
    index: int
    degree: int
    homomorphism: bool
    sweep: str
    image_order: int
    image_exponent: int
    image_is_prime_power: bool
    kernel_order: int


class EmbeddingReport(BaseModel):
    group: str
    group_order: int
    family_size: int
    family_intersection_order: int
    members: list[MemberImage] = Field(default_factory=list)
    injective: bool
    index_bound: Optional[int] = Field(
        default=None,
        description="Common index of the members when the combined map is injective.",
    )

    @property
    def all_homomorphisms(self) -> bool:
        return all(m.homomorphism for m in self.members)

    @property
    def conclusion(self) -> Optional[str]:
        if self.index_bound is None or not self.all_homomorphisms:
            return None
        return (
            f"{self.group} embeds in a product of {self.family_size} copies of "
            f"Sym({self.index_bound}) through p-subgroups, so e_inf divides {self.index_bound}"
        )


def core(group: FiniteGroup, h: Subgroup, cap: Optional[int] = None) -> Subgroup:
    """Intersection of the conjugates of H: the kernel of the action on G/H."""
    kernel = coset_action(group, h, cap=cap).kernel()
    return Subgroup.from_codes(group, kernel, kernel.tolist())


def _describe_member(action: CosetAction, sweep: PairSweep) -> MemberImage:
    rows = action.image_rows()
    return MemberImage(
        subgroup_order=action.subgroup.order,
        index=action.degree,
        degree=action.degree,
        homomorphism=action.is_homomorphism(sweep.left, sweep.right),
        sweep=sweep.describe(),
        image_order=int(rows.shape[0]),
        image_exponent=action.image_exponent(),
        image_is_prime_power=_is_prime_power(int(rows.shape[0])),
        kernel_order=int(action.kernel().size),
    )


def verify_embedding(
    group: FiniteGroup,
    family: Sequence[Subgroup],
    *,
    strict: bool = True,
    threads: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    cap: Optional[int] = None,
) -> EmbeddingReport:
    """
    Check that the coset actions on the members of ``family`` combine into an
    injective homomorphism of ``group`` into a product of symmetric groups.

    Each action is checked to be a homomorphism on every pair of elements when
    |G|^2 fits the sweep budget and on ``samples`` seeded random pairs
    otherwise. Injectivity holds when every nonidentity element moves some
    coset of some member.

    Args:
        strict: Refuse families whose members differ in index or whose common
            intersection is nontrivial. With ``strict=False`` such families
            are processed and the failure shows up as ``injective=False``.

    Raises:
        ContractError: For an empty family or members of another group.
        HypothesisFailedError: In strict mode, when the hypotheses fail.
    """
    if not family:
        raise ContractError("verify_embedding needs a nonempty family")
    for member in family:
        if member.parent != group:
            raise ContractError(f"{member!r} is not a subgroup of {group!r}")
    intersection = intersection_of(list(family))
    indices = {member.index for member in family}
    if strict and len(indices) != 1:
        raise HypothesisFailedError(f"family members have indices {sorted(indices)}")
    if strict and not intersection.is_trivial():
        raise HypothesisFailedError(
            f"family intersection has order {intersection.order}, expected 1"
        )

    settings = get_verify_settings()
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    sweep = pair_sweep(
        group.order,
        resolve_cap(None, "sweep_budget"),
        settings.sample_pairs if samples is None else samples,
        rng,
    )
    actions = thread_map(
        lambda h: coset_action(group, h, cap=cap),
        family,
        settings.threads if threads is None else threads,
    )
    members = [_describe_member(action, sweep) for action in actions]
    moved = reduce(np.logical_or, (action.moved_mask() for action in actions))
    nonidentity = np.arange(group.order, dtype=CODE_DTYPE) != group.identity
    injective = bool(np.array_equal(moved, nonidentity))
    bound = indices.pop() if injective and len(indices) == 1 else None
    logger.info(
        f"embedding of {group!r} through {len(family)} coset actions: "
        f"injective={injective}, homomorphisms={all(m.homomorphism for m in members)}"
    )
    return EmbeddingReport(
        group=repr(group),
        group_order=group.order,
        family_size=len(family),
        family_intersection_order=intersection.order,
        members=members,
        injective=injective,
        index_bound=bound,
    )
