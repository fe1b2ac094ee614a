"""
Tests for cohexp.lattice.subgroups
"""

import pytest

from cohexp.bracket import (
    BracketAlgebra,
    NotASubalgebraError,
    is_subalgebra,
    sl2_h_free_subalgebra,
)
from cohexp.exceptions import ContractError
from cohexp.fpla import Subspace
from cohexp.groups import BracketGroup, TableGroup, closure, cyclic_table
from cohexp.lattice import (
    HypothesisFailedError,
    frattini,
    hyperplane_preimages,
    index_p2_intersection,
    index_p2_intersection_direct,
    lift_subalgebra,
    line_preimage,
    maximal_subgroups,
    maximal_subgroups_generic,
    normal_closure,
    subgroups_intersection,
    w_part,
    witness_family,
)


class TestMaximalSubgroups:
    """Tests for the maximal subgroups of G(sl2, F3)."""

    def test_count_and_index(self, g3):
        """Test 13 maximal subgroups, each of index 3 and containing W."""
        maximals = maximal_subgroups(g3)
        w = g3.w_subgroup()
        assert len(maximals) == 13
        assert len(set(maximals)) == 13
        assert all(m.index == 3 for m in maximals)
        assert all(w.issubset(m) and m.is_closed() for m in maximals)

    def test_frattini_of_g_is_w(self, g3):
        """Test Phi(G) = W of order 27."""
        whole = closure(g3, g3.generators())
        assert frattini(whole) == g3.w_subgroup()

    def test_frattini_of_maximals(self, g3):
        """Test Phi(M) = {0} x U for subalgebras U and W otherwise."""
        for entry in hyperplane_preimages(g3):
            phi = frattini(entry.subgroup)
            if is_subalgebra(g3.algebra, entry.hyperplane):
                assert phi == w_part(g3, entry.hyperplane)
                assert phi.order == 9
            else:
                assert phi == g3.w_subgroup()

    def test_index_p2_intersection_is_trivial(self, g3):
        """Test that the index-9 subgroups meet trivially."""
        assert index_p2_intersection(g3).is_trivial()

    def test_direct_listing_agrees(self, g3):
        """Test the cross-check through explicit index-9 subgroups."""
        assert index_p2_intersection_direct(g3).is_trivial()

    def test_generic_maximals_of_abelian_group(self, f3):
        """Test that Z/9 has one maximal subgroup and Z/3 x Z/3 four."""
        z9 = cyclic_table(9)
        found = maximal_subgroups_generic(closure(z9, [1]))
        assert [m.order for m in found] == [3]
        z3 = BracketGroup(BracketAlgebra.zero(f3, 1))
        w = z3.w_subgroup()
        assert [m.order for m in maximal_subgroups_generic(w)] == [1]

    def test_frattini_of_trivial(self, g3):
        """Test that the trivial subgroup is its own Frattini subgroup."""
        assert frattini(closure(g3, [])).is_trivial()
        assert maximal_subgroups_generic(closure(g3, [])) == []

    def test_normal_closure(self, g3, f3):
        """Test that W is normal: its normal closure from one element is cyclic."""
        seed = g3.element(f3.zero(3), f3.vector([1, 0, 0])).code
        assert normal_closure(g3, g3.generators().tolist(), [seed]).order == 3

    def test_normal_closure_grows(self):
        """Test in S3 that the normal closure of a transposition is everything."""
        perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
        index = {p: i for i, p in enumerate(perms)}
        s3 = TableGroup(
            [[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
        )
        assert normal_closure(s3, [1, 3], [3]).order == 6


class TestLifts:
    """Tests for line preimages and subalgebra lifts."""

    def test_line_preimage(self, g3, f3):
        """Test that a line preimage has order 81 and contains W."""
        line = Subspace.span(f3, 3, [f3.vector([1, 1, 0])])
        h = line_preimage(g3, line)
        assert h.order == 81
        assert g3.w_subgroup().issubset(h)

    def test_line_preimage_needs_a_line(self, g3, f3):
        """Test the dimension check."""
        with pytest.raises(ContractError):
            line_preimage(g3, Subspace.whole(f3, 3))

    def test_lift_of_h_free_subalgebra(self, g3, f3):
        """Test |K| = 81 and K meets W in {0} x S."""
        s = sl2_h_free_subalgebra(f3)
        k = lift_subalgebra(g3, s)
        assert k.order == 81
        assert k.intersect(g3.w_subgroup()) == w_part(g3, s)

    def test_lift_rejects_non_subalgebra(self, g3, f3):
        """Test that span{x+, x-} is refused."""
        plane = Subspace.span(f3, 3, [f3.unit(3, 1), f3.unit(3, 2)])
        with pytest.raises(NotASubalgebraError):
            lift_subalgebra(g3, plane)


class TestWitnessFamily:
    """Tests for the index-p^2 witness family."""

    def test_size_and_orders(self, family3):
        """Test 13 + 4 members, each of order 81."""
        assert len(family3.line_preimages) == 13
        assert len(family3.lifts) == 4
        assert len(family3.members) == 17
        assert all(m.order == 81 for m in family3.members)

    def test_intersection_trivial(self, family3):
        """Test that the family meets trivially."""
        assert family3.intersection.is_trivial()

    def test_line_preimages_meet_in_w(self, g3, family3):
        """Test that the line preimages alone meet in W."""
        assert subgroups_intersection(family3.line_preimages) == g3.w_subgroup()

    def test_lifts_alone_meet_trivially(self, family3):
        """Test that the subalgebra lifts already meet trivially, and agree with the family total."""
        assert subgroups_intersection(family3.lifts).is_trivial()
        assert subgroups_intersection(family3.members) == family3.intersection

    def test_rejects_wrong_index(self, f3):
        """Test that the family of a 2-dimensional abelian algebra has the wrong index."""
        g = BracketGroup(BracketAlgebra.zero(f3, 2))
        with pytest.raises(HypothesisFailedError):
            witness_family(g)
