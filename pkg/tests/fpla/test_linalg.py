"""
Tests for cohexp.fpla.linalg
"""

import itertools

import pytest

from cohexp.exceptions import CapExceededError, ContractError
from cohexp.fpla import (
    Subspace,
    contains,
    enumerate_subspaces,
    gaussian_binomial,
    intersect,
    rref,
)


class TestRref:
    """Tests for rref."""

    def test_rank_and_form(self, f3):
        """Test a rank-2 matrix over F3."""
        rank, reduced = rref(f3, [[1, 2, 0], [2, 1, 0], [0, 0, 1]])
        assert rank == 2
        assert reduced == ((1, 2, 0), (0, 0, 1), (0, 0, 0))

    def test_empty_matrix(self, f3):
        """Test that an empty matrix has rank 0."""
        assert rref(f3, [])[0] == 0

    def test_entries_reduced(self, f5):
        """Test that entries outside 0..p-1 are reduced first."""
        rank, reduced = rref(f5, [[6, 10]])
        assert rank == 1
        assert reduced[0] == (1, 0)


class TestGaussianBinomial:
    """Tests for gaussian_binomial."""

    @pytest.mark.parametrize(
        "p,n,k,expected",
        [(3, 3, 1, 13), (3, 3, 2, 13), (5, 3, 1, 31), (5, 3, 2, 31), (3, 2, 1, 4), (3, 4, 2, 130)],
    )
    def test_counts(self, p, n, k, expected):
        """Test known subspace counts."""
        assert gaussian_binomial(p, n, k) == expected

    def test_edge_cases(self):
        """Test k = 0, k = n and k out of range."""
        assert gaussian_binomial(3, 3, 0) == 1
        assert gaussian_binomial(3, 3, 3) == 1
        assert gaussian_binomial(3, 3, 4) == 0


class TestSubspace:
    """Tests for Subspace."""

    def test_span_is_canonical(self, f3):
        """Test that different spanning sets give equal subspaces."""
        a = Subspace.span(f3, 3, [f3.vector([1, 1, 0]), f3.vector([0, 1, 0])])
        b = Subspace.span(f3, 3, [f3.vector([1, 0, 0]), f3.vector([2, 1, 0]), f3.vector([1, 1, 0])])
        assert a == b
        assert a.dim == 2
        assert hash(a) == hash(b)

    def test_non_rref_basis_rejected(self, f3):
        """Test that the constructor insists on a canonical basis."""
        with pytest.raises(ContractError):
            Subspace(f3, 2, (f3.vector([1, 1]), f3.vector([0, 1])))

    def test_membership(self, f3):
        """Test __contains__."""
        s = Subspace.span(f3, 3, [f3.vector([1, 2, 0])])
        assert f3.vector([2, 1, 0]) in s
        assert f3.vector([1, 0, 0]) not in s

    def test_elements(self, f5):
        """Test that a plane over F5 has 25 distinct elements."""
        s = Subspace.span(f5, 3, [f5.unit(3, 0), f5.unit(3, 2)])
        elements = list(s.elements())
        assert len(elements) == 25
        assert len({v.digits for v in elements}) == 25

    def test_sum_and_intersect(self, f3):
        """Test sum and the Zassenhaus intersection."""
        a = Subspace.span(f3, 3, [f3.unit(3, 0), f3.unit(3, 1)])
        b = Subspace.span(f3, 3, [f3.unit(3, 1), f3.unit(3, 2)])
        assert a.sum(b) == Subspace.whole(f3, 3)
        assert intersect(a, b) == Subspace.span(f3, 3, [f3.unit(3, 1)])
        assert a.intersect(Subspace.zero(f3, 3)) == Subspace.zero(f3, 3)

    def test_incompatible_subspaces(self, f3, f5):
        """Test that subspaces of different spaces do not mix."""
        with pytest.raises(ContractError):
            Subspace.whole(f3, 2).sum(Subspace.whole(f5, 2))


class TestEnumerateSubspaces:
    """Tests for enumerate_subspaces."""

    @pytest.mark.parametrize("k,expected", [(0, 1), (1, 13), (2, 13), (3, 1)])
    def test_counts_over_f3(self, f3, k, expected):
        """Test that counts match the Gaussian binomials."""
        found = enumerate_subspaces(f3, 3, k)
        assert len(found) == expected
        assert len(set(found)) == expected
        assert all(s.dim == k for s in found)

    def test_counts_over_f5(self, f5):
        """Test the 31 lines of F5^3."""
        assert len(enumerate_subspaces(f5, 3, 1)) == 31

    def test_order_is_stable(self, f3):
        """Test that two calls give the same order."""
        assert enumerate_subspaces(f3, 3, 2) == enumerate_subspaces(f3, 3, 2)

    def test_dimension_out_of_range(self, f3):
        """Test that k outside [0, n] is a contract error."""
        with pytest.raises(ContractError):
            enumerate_subspaces(f3, 3, 4)

    def test_cap(self, f3):
        """Test that the cap is checked before enumerating."""
        with pytest.raises(CapExceededError):
            enumerate_subspaces(f3, 3, 1, cap=5)


class TestSubspaceLattice:
    """Tests for intersection, sum and membership over all small subspaces of F3^3."""

    def test_dimension_formula_on_all_plane_pairs(self, f3):
        """Test dim(a & b) + dim(a + b) = dim a + dim b for all 169 pairs of planes."""
        planes = enumerate_subspaces(f3, 3, 2)
        pairs = list(itertools.product(planes, repeat=2))
        assert len(pairs) == 169
        for a, b in pairs:
            meet = intersect(a, b)
            assert meet.dim + a.sum(b).dim == a.dim + b.dim
            assert all(contains(a, v) and contains(b, v) for v in meet.elements())

    def test_contains_matches_element_lists(self, f3):
        """Test contains against the explicit elements of every line and plane."""
        spaces = enumerate_subspaces(f3, 3, 1) + enumerate_subspaces(f3, 3, 2)
        assert len(spaces) == 26
        vectors = list(f3.vectors(3))
        assert len(vectors) == 27
        for s in spaces:
            members = {v.digits for v in s.elements()}
            assert len(members) == 3**s.dim
            for v in vectors:
                assert contains(s, v) == (v.digits in members)
