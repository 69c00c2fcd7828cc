"""Exception types shared across the kernel."""


class HetcatError(Exception):
    """Base class for kernel errors."""


class StructuralError(HetcatError):
    """An id fails to resolve or a table entry has an impossible shape.

    Structural errors are raised, never reported as law violations: a value
    that is not even well-formed cannot be meaningfully law-checked.
    """


class GuardExceeded(HetcatError):
    """A construction would exceed its size guard."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate
