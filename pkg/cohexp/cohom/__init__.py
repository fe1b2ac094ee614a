from cohexp.cohom.cohomology import (
    AbelianGroupInvariants,
    CohomologyReport,
    DegreeCohomology,
    cohomology,
    cohomology_of_group,
    e_lowdeg,
)
from cohexp.cohom.complexes import (
    CochainComplexDescriptor,
    abelian_cochain,
    bar_cochain,
    periodic_cochain,
    weak_compositions,
)
from cohexp.cohom.exceptions import InsufficientDegreesError, NotAComplexError
from cohexp.cohom.matrix import IntegerMatrix
from cohexp.cohom.snf import (
    SmithForm,
    determinant,
    elementary_divisors,
    integer_rank,
    minor_gcd,
    smith_normal_form,
    xgcd,
)

__all__ = [
    "AbelianGroupInvariants",
    "CochainComplexDescriptor",
    "CohomologyReport",
    "DegreeCohomology",
    "InsufficientDegreesError",
    "IntegerMatrix",
    "NotAComplexError",
    "SmithForm",
    "abelian_cochain",
    "bar_cochain",
    "cohomology",
    "cohomology_of_group",
    "determinant",
    "e_lowdeg",
    "elementary_divisors",
    "integer_rank",
    "minor_gcd",
    "periodic_cochain",
    "smith_normal_form",
    "weak_compositions",
    "xgcd",
]
