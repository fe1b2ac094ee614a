import pytest

from cohexp.lattice import witness_family


@pytest.fixture(scope="module")
def family3(g3):
    return witness_family(g3)
