from cohexp.exceptions import ContractError


class UnsupportedFieldError(ContractError):
    """
    Raised when a prime field is requested for an unsupported characteristic.
    """

    def __init__(self, p: int, reason: str = "odd prime required"):
        self.p = p
        ContractError.__init__(self, f"p={p}: {reason}")
