from cohexp.fpla.exceptions import UnsupportedFieldError
from cohexp.fpla.field import (
    FpVector,
    PrimeField,
    is_prime,
    vector_from_index,
    vector_index,
)
from cohexp.fpla.linalg import (
    Subspace,
    contains,
    enumerate_subspaces,
    gaussian_binomial,
    intersect,
    rref,
)

__all__ = [
    "FpVector",
    "PrimeField",
    "Subspace",
    "UnsupportedFieldError",
    "contains",
    "enumerate_subspaces",
    "gaussian_binomial",
    "intersect",
    "is_prime",
    "rref",
    "vector_from_index",
    "vector_index",
]
