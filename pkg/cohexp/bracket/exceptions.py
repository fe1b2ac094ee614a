from cohexp.exceptions import ContractError


class MalformedAlgebraError(ContractError):
    """
    Raised when a structure-constant table does not have the shape n x n x n
    or lists the wrong number of basis names.
    """

    pass


class NotASubalgebraError(ContractError):
    """
    Raised when a subspace handed to an operation that needs a subalgebra is not
    closed under the bracket.
    """

    def __init__(self, subspace: object):
        self.subspace = subspace
        ContractError.__init__(self, f"{subspace} is not closed under the bracket")
