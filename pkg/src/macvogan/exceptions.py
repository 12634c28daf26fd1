class MacVoganError(Exception):
    """Base class for errors raised by this package."""


class DomainError(MacVoganError, ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(MacVoganError, RuntimeError):
    """A computation would exceed the configured size budget."""
