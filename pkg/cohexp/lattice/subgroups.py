from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from cohexp.bracket import NotASubalgebraError, is_subalgebra, subalgebras_of_dim
from cohexp.exceptions import ContractError
from cohexp.fpla import PrimeField, Subspace, enumerate_subspaces
from cohexp.groups import (
    CODE_DTYPE,
    BracketGroup,
    FiniteGroup,
    Subgroup,
    closure,
    intersection_of,
)
from cohexp.lattice.exceptions import HypothesisFailedError
from cohexp.settings import resolve_cap


def _prime_of(order: int) -> int:
    """The prime p with order = p^k; raises for anything else."""
    if order < 2:
        raise ContractError("the trivial group has no prime")
    p = next(d for d in itertools.count(2) if order % d == 0)
    m = order
    while m % p == 0:
        m //= p
    if m != 1:
        raise ContractError(f"order {order} is not a prime power")
    return p


def _subspace_codes(space: Subspace) -> np.ndarray:
    return np.array(sorted(v.index for v in space.elements()), dtype=CODE_DTYPE)


def _lift_codes(group: BracketGroup, space: Subspace) -> list[int]:
    return [group.lift(v).code for v in space.basis]


def _w_codes(group: BracketGroup, space: Subspace) -> list[int]:
    return [int(group.join(0, v.index)) for v in space.basis]


def w_part(group: BracketGroup, space: Subspace) -> Subgroup:
    """{0} x space, as a subgroup of W."""
    return Subgroup.from_codes(
        group, group.join(0, _subspace_codes(space)), _w_codes(group, space)
    )


def preimage_of(group: BracketGroup, space: Subspace) -> Subgroup:
    """{(a, s) : a in space}; always a subgroup containing W."""
    whole = Subspace.whole(group.field, group.n)
    return group.preimage(
        _subspace_codes(space), _lift_codes(group, space) + _w_codes(group, whole)
    )


@dataclass(frozen=True, eq=False)
class HyperplanePreimage:
    hyperplane: Subspace
    subgroup: Subgroup


def hyperplane_preimages(group: BracketGroup) -> list[HyperplanePreimage]:
    hyperplanes = enumerate_subspaces(group.field, group.n, group.n - 1)
    return [HyperplanePreimage(u, preimage_of(group, u)) for u in hyperplanes]


def maximal_subgroups(group: BracketGroup) -> list[Subgroup]:
    """
    Preimages M = {(a, s) : a in U} of the hyperplanes U of V, one per
    hyperplane, each of index p. Since W is the Frattini subgroup of G these
    are all the maximal subgroups.
    """
    return [h.subgroup for h in hyperplane_preimages(group)]


def normal_closure(
    parent: FiniteGroup, generators: Sequence[int], seeds: np.ndarray, cap: Optional[int] = None
) -> Subgroup:
    """Smallest subgroup containing ``seeds`` and normalised by ``generators``."""
    gens = np.asarray(generators, dtype=CODE_DTYPE)
    current = closure(parent, seeds, cap=cap)
    while True:
        e = current.elements
        conjugates = parent.mul(parent.mul(parent.inv(gens)[:, None], e[None, :]), gens[:, None])
        conjugates = np.unique(conjugates)
        if np.isin(conjugates, e, assume_unique=True).all():
            return current
        current = closure(parent, np.union1d(current.generators, conjugates), cap=cap)


def frattini(h: Subgroup, cap: Optional[int] = None) -> Subgroup:
    """
    Phi(H) = H^p [H, H] for a p-group H.

    When |H|^2 fits ``frattini_pair_cap`` the commutators of all pairs of
    elements are used; above that the commutator subgroup is the normal closure
    of the commutators of H's generators.
    """
    parent = h.parent
    if h.is_trivial():
        return Subgroup.trivial(parent)
    p = _prime_of(h.order)
    e = h.elements
    powers = np.unique(parent.pow(e, p))
    if h.order * h.order <= resolve_cap(None, "frattini_pair_cap"):
        commutators = np.unique(parent.commutator(e[:, None], e[None, :]))
    else:
        gens = np.asarray(h.generators, dtype=CODE_DTYPE)
        seeds = np.unique(parent.commutator(gens[:, None], gens[None, :]))
        commutators = normal_closure(parent, h.generators, seeds, cap=cap).elements
    return closure(parent, np.union1d(powers, commutators), cap=cap)


def maximal_subgroups_generic(h: Subgroup, cap: Optional[int] = None) -> list[Subgroup]:
    """
    Maximal subgroups of a p-group H through its Frattini quotient.

    H/Phi(H) is elementary abelian of rank d; a minimal generating set
    g_1..g_d is picked greedily and every hyperplane c of F_p^d gives the
    maximal subgroup generated by Phi(H) and the products g_1^c_1 ... g_d^c_d
    over a basis of c.
    """
    parent = h.parent
    if h.is_trivial():
        return []
    p = _prime_of(h.order)
    phi = frattini(h, cap=cap)
    basis: list[int] = []
    span = phi
    for g in h.elements:
        if int(g) in span:
            continue
        basis.append(int(g))
        span = closure(parent, list(phi.generators) + basis, cap=cap)
        if span.order == h.order:
            break
    d = len(basis)
    field = PrimeField(p)
    result = []
    for plane in enumerate_subspaces(field, d, d - 1):
        gens = list(phi.generators) or [parent.identity]
        for row in plane.basis:
            x = np.int64(parent.identity)
            for g, c in zip(basis, row.digits):
                if c:
                    x = parent.mul(x, parent.pow(np.int64(g), c))
            gens.append(int(x))
        result.append(closure(parent, gens, cap=cap))
    logger.debug(f"{len(result)} maximal subgroups of a subgroup of order {h.order}")
    return result


def index_p2_intersection(group: BracketGroup, cap: Optional[int] = None) -> Subgroup:
    """
    Intersection of all subgroups of index p^2, computed as the intersection of
    Phi(M) over the maximal subgroups M.

    Every index-p^2 subgroup is maximal in some maximal subgroup M and so
    contains Phi(M); conversely Phi(M) is the intersection of the maximal
    subgroups of M, each of index p^2 in G.
    """
    frattinis = [frattini(m, cap=cap) for m in maximal_subgroups(group)]
    return intersection_of(frattinis)


def index_p2_intersection_direct(group: BracketGroup, cap: Optional[int] = None) -> Subgroup:
    """Same intersection, from an explicit list of all index-p^2 subgroups."""
    members: list[Subgroup] = []
    for m in maximal_subgroups(group):
        members.extend(maximal_subgroups_generic(m, cap=cap))
    logger.debug(f"{len(members)} index-p^2 subgroups listed (with repeats)")
    return intersection_of(members)


def lift_subalgebra(group: BracketGroup, s: Subspace, cap: Optional[int] = None) -> Subgroup:
    """
    The subgroup K generated by lifts (u, 0), (v, 0) of a basis of a
    2-dimensional subalgebra S; it has order p^4, lies over S and meets W in
    {0} x S.

    Raises:
        NotASubalgebraError: If S is not 2-dimensional and closed under the bracket.
    """
    if s.dim != 2 or not is_subalgebra(group.algebra, s):
        raise NotASubalgebraError(s)
    return closure(group, _lift_codes(group, s), cap=cap)


def line_preimage(group: BracketGroup, line: Subspace) -> Subgroup:
    """{(a, s) : a in line}, of order p^(n+1)."""
    if line.dim != 1:
        raise ContractError(f"line_preimage needs a 1-dimensional subspace, got dim {line.dim}")
    if line.field != group.field or line.ambient_dim != group.n:
        raise ContractError(f"{line} does not live in V of {group!r}")
    return preimage_of(group, line)


@dataclass(frozen=True, eq=False)
class WitnessFamily:
    """Line preimages and subalgebra lifts, with their common intersection."""

    lines: tuple[Subspace, ...]
    line_preimages: tuple[Subgroup, ...]
    subalgebras: tuple[Subspace, ...]
    lifts: tuple[Subgroup, ...]
    intersection: Subgroup

    @property
    def members(self) -> list[Subgroup]:
        return list(self.line_preimages) + list(self.lifts)


def witness_family(group: BracketGroup, cap: Optional[int] = None) -> WitnessFamily:
    """
    Raises:
        HypothesisFailedError: If some member does not have index p^2.
    """
    lines = enumerate_subspaces(group.field, group.n, 1, cap=cap)
    preimages = [line_preimage(group, line) for line in lines]
    subalgebras = subalgebras_of_dim(group.algebra, 2, cap=cap)
    lifts = [lift_subalgebra(group, s, cap=cap) for s in subalgebras]
    target = group.p**2
    for member in preimages + lifts:
        if member.index != target:
            raise HypothesisFailedError(
                f"{member!r} has index {member.index}, expected {target}"
            )
    intersection = subgroups_intersection(preimages + lifts)
    logger.info(
        f"witness family: {len(preimages)} line preimages + {len(lifts)} lifts, "
        f"intersection of order {intersection.order}"
    )
    return WitnessFamily(
        tuple(lines), tuple(preimages), tuple(subalgebras), tuple(lifts), intersection
    )


def subgroups_intersection(members: Sequence[Subgroup]) -> Subgroup:
    """Set-wise intersection of a family of subgroups of one group."""
    result = intersection_of(list(members))
    logger.debug(f"intersection of {len(members)} subgroups has order {result.order}")
    return result
