"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates an operation's precondition."""


class CapExceededError(RuntimeError):
    """An enumeration would produce more terms than the configured cap."""
