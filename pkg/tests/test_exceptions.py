"""
Tests for cohexp.exceptions
"""

import pytest

from cohexp.exceptions import CapExceededError, CohexpError, ContractError, check_cap


class TestExceptionHierarchy:
    """Tests for the base exceptions."""

    def test_contract_error_is_value_error(self):
        """Test that ContractError is both a CohexpError and a ValueError."""
        error = ContractError("bad input")
        assert isinstance(error, CohexpError)
        assert isinstance(error, ValueError)
        assert str(error) == "bad input"

    def test_cap_exceeded_attributes(self):
        """Test the attributes and message of CapExceededError."""
        error = CapExceededError("subspaces", 130, 100, hint="raise --cap")
        assert error.what == "subspaces"
        assert error.size == 130
        assert error.cap == 100
        assert str(error) == "subspaces: size 130 exceeds cap 100 (raise --cap)"
        assert not isinstance(error, ContractError)


class TestCheckCap:
    """Tests for check_cap."""

    def test_at_cap_is_allowed(self):
        """Test that size == cap passes."""
        check_cap("things", 10, 10)

    def test_above_cap_raises(self):
        """Test that size > cap raises."""
        with pytest.raises(CapExceededError, match="things: size 11 exceeds cap 10"):
            check_cap("things", 11, 10)
