from cohexp.exceptions import CohexpError


class HypothesisFailedError(CohexpError):
    """
    Raised when a subgroup family does not meet the hypotheses of the
    embedding argument: a member of the wrong index, or a nontrivial common
    intersection.
    """

    ...
