from typing import Optional


class CohexpError(Exception):
    """Base exception for all cohexp errors."""

    ...


class ContractError(CohexpError, ValueError):
    """Raised when an operation is called outside its preconditions."""

    ...


class CapExceededError(CohexpError):
    """
    Raised when an enumeration would grow past a configured cap.

    Attributes:
        what: Human readable name of the thing being enumerated.
        size: The size that was requested (or a lower bound for it).
        cap: The cap that was in force.
    """

    def __init__(self, what: str, size: int, cap: int, hint: Optional[str] = None):
        self.what = what
        self.size = size
        self.cap = cap
        message = f"{what}: size {size} exceeds cap {cap}"
        if hint:
            message += f" ({hint})"
        CohexpError.__init__(self, message)


def check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceededError(what, size, cap)
