from cohexp.bracket.algebra import (
    AlgebraValidation,
    BracketAlgebra,
    bracket_eval,
    common_intersection,
    derived_subspace,
    is_subalgebra,
    sl2,
    sl2_h_free_subalgebra,
    subalgebras_of_dim,
    validate,
)
from cohexp.bracket.exceptions import MalformedAlgebraError, NotASubalgebraError

__all__ = [
    "AlgebraValidation",
    "BracketAlgebra",
    "MalformedAlgebraError",
    "NotASubalgebraError",
    "bracket_eval",
    "common_intersection",
    "derived_subspace",
    "is_subalgebra",
    "sl2",
    "sl2_h_free_subalgebra",
    "subalgebras_of_dim",
    "validate",
]
