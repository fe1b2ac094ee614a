from cohexp.exceptions import ContractError


class NotAComplexError(ContractError):
    """Raised when consecutive differentials do not compose to zero."""

    def __init__(self, degree: int, reason: str = "d^(n+1) d^n != 0"):
        self.degree = degree
        super().__init__(f"not a cochain complex at degree {degree}: {reason}")


class InsufficientDegreesError(ContractError):
    """Raised when a report does not reach the requested degree."""

    def __init__(self, requested: int, available: int):
        self.requested = requested
        self.available = available
        super().__init__(
            f"degree {requested} requested but the report stops at degree {available}"
        )
