"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside its documented domain."""


class EnumerationLimitError(DomainError):
    """A brute-force enumeration was requested beyond the supported size."""


class EmptySampleError(DomainError):
    """An operation needs more observations than were supplied."""
