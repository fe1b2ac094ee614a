"""
Pytest configuration and fixtures for cohexp tests.
"""

import pytest

from cohexp.bracket import sl2
from cohexp.fpla import PrimeField
from cohexp.groups import BracketGroup
from cohexp.settings import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop the cached settings so environment overrides in a test apply."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def f3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def f5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def sl2_f3(f3):
    return sl2(f3)


@pytest.fixture(scope="session")
def sl2_f5(f5):
    return sl2(f5)


@pytest.fixture(scope="session")
def g3(sl2_f3):
    """G(sl2, F3), order 729; shared because its tables are cached."""
    return BracketGroup(sl2_f3)


@pytest.fixture(scope="session")
def g5(sl2_f5):
    """G(sl2, F5), order 15625."""
    return BracketGroup(sl2_f5)
