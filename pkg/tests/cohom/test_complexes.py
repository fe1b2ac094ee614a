"""
Tests for cohexp.cohom.complexes
"""

import pytest

from cohexp.cohom import (
    CochainComplexDescriptor,
    IntegerMatrix,
    NotAComplexError,
    abelian_cochain,
    bar_cochain,
    periodic_cochain,
    weak_compositions,
)
from cohexp.exceptions import CapExceededError, ContractError
from cohexp.groups import TableGroup, abelian_table, cyclic_table


class TestPeriodicCochain:
    """Tests for periodic_cochain."""

    def test_differentials_alternate(self):
        """Test d^n = 0 for even n and m for odd n."""
        c = periodic_cochain(5, 4)
        assert c.ranks == (1,) * 6
        assert [c.differential(n)[(0, 0)] for n in range(5)] == [0, 5, 0, 5, 0]
        assert c.group_order == 5
        c.check()

    def test_rejects_small_order(self):
        """Test m >= 2."""
        with pytest.raises(ContractError):
            periodic_cochain(1, 3)


class TestAbelianCochain:
    """Tests for the tensor complex."""

    def test_weak_compositions(self):
        """Test counts and order."""
        assert weak_compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
        assert len(weak_compositions(4, 3)) == 15

    def test_ranks_and_square_zero(self):
        """Test that rank C^n = n + 1 for two factors and d d = 0."""
        c = abelian_cochain([3, 3], 4)
        assert c.ranks == (1, 2, 3, 4, 5, 6)
        c.check()

    def test_three_factors_square_zero(self):
        """Test the Koszul signs with three factors."""
        abelian_cochain([2, 4, 3], 4).check()

    def test_rank_cap(self):
        """Test the cochain rank cap."""
        with pytest.raises(CapExceededError):
            abelian_cochain([2, 2, 2], 6, cap=10)

    def test_bad_factor(self):
        """Test that factors below 2 are refused."""
        with pytest.raises(ContractError):
            abelian_cochain([3, 1], 2)


class TestBarCochain:
    """Tests for the normalized bar complex."""

    def test_ranks(self):
        """Test rank C^n = (|G| - 1)^n."""
        c = bar_cochain(cyclic_table(3), 3)
        assert c.ranks == (1, 2, 4, 8, 16)
        c.check()

    def test_non_abelian_square_zero(self):
        """Test d d = 0 for Sym(3)."""
        perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
        index = {p: i for i, p in enumerate(perms)}
        s3 = TableGroup(
            [[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
        )
        bar_cochain(s3, 2).check()

    def test_order_cap(self):
        """Test that groups above the bar order cap are refused."""
        with pytest.raises(CapExceededError):
            bar_cochain(cyclic_table(10), 2)

    def test_rank_cap(self):
        """Test the bar rank cap."""
        with pytest.raises(CapExceededError):
            bar_cochain(abelian_table([3, 3]), 5)


class TestDescriptor:
    """Tests for CochainComplexDescriptor checks."""

    def test_shape_mismatch(self):
        """Test that differential shapes must match the ranks."""
        with pytest.raises(NotAComplexError):
            CochainComplexDescriptor(
                name="bad",
                max_degree=0,
                ranks=(1, 2),
                differentials=(IntegerMatrix.zeros(1, 1),),
            )

    def test_not_a_complex(self):
        """Test that d^1 d^0 != 0 is detected."""
        one = IntegerMatrix.identity(1)
        c = CochainComplexDescriptor(
            name="bad", max_degree=1, ranks=(1, 1, 1), differentials=(one, one)
        )
        with pytest.raises(NotAComplexError) as excinfo:
            c.check()
        assert excinfo.value.degree == 0

    def test_wrong_number_of_ranks(self):
        """Test the rank count check."""
        with pytest.raises(ContractError):
            CochainComplexDescriptor(
                name="bad", max_degree=1, ranks=(1, 1), differentials=()
            )
