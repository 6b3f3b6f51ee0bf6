"""Exception types raised by orderedpmf."""


class OPMError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(OPMError):
    """An input value lies outside the domain (empty, zero, negative, mixed)."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionError(OPMError):
    """A sequence does not satisfy the unit-product hypothesis."""

    def __init__(self, message, product=None):
        super().__init__(message)
        self.product = product


class CapacityError(OPMError):
    """Exhaustive enumeration was requested beyond the configured limit."""
